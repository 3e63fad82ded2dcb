#include "genusdist/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace genusdist {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_rational(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Json to_json(const GenusDistribution& d) {
    Json counts = Json::object();
    Json probs = Json::object();
    for (std::size_t g = 0; g < d.counts.size(); ++g) {
        counts[std::to_string(g)] = d.counts[g].get_str();
        probs[std::to_string(g)] = d.probability(g).get_d();
    }
    return Json{{"n", d.n}, {"counts", counts}, {"total", d.total.get_str()}, {"probabilities", probs}};
}

Json to_json(const FaceDistribution& d) {
    Json probs = Json::object();
    for (std::size_t k = 1; k < d.probs.size(); ++k) probs[std::to_string(k)] = format_rational(d.probs[k]);
    return Json{{"n", d.n}, {"probabilities", probs}};
}

Json to_json(const HzIdentityReport& r) {
    Json j{{"x_order", r.x_order}, {"y_order", r.y_order}, {"terms_checked", r.terms_checked}, {"holds", r.holds()}};
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        j["first_mismatch"] = Json{{"x_power", m.x_power},
                                   {"y_power", m.y_power},
                                   {"counts_side", format_rational(m.counts_side)},
                                   {"closed_form_side", format_rational(m.closed_form_side)}};
    }
    return j;
}

Json to_json(const StationaryPoint& s) {
    return Json{{"n", s.n},
                {"t_bar", s.t_bar},
                {"t_bar_approx", s.t_bar_approx},
                {"g_bar", s.g_bar},
                {"g_bar_log_form", (static_cast<double>(s.n) - std::log(static_cast<double>(s.n))) / 2.0},
                {"residual", s.residual},
                {"iterations", s.iterations}};
}

Json to_json(const LltComparison& c) {
    Json rows = Json::array();
    for (const auto& r : c.rows) {
        rows.push_back(Json{{"g", r.g}, {"p_exact", r.p_exact}, {"p_llt", r.p_llt}, {"ratio", r.ratio}});
    }
    return Json{{"n", c.model.n},
                {"alpha", c.model.alpha},
                {"g_bar", c.model.mean},
                {"variance", c.model.variance},
                {"window_halfwidth", c.model.window_halfwidth()},
                {"window_mass", c.window_mass},
                {"tv_distance", c.tv_distance},
                {"rows", rows}};
}

Json to_json(const SampleReport& r) {
    Json hist = Json::object();
    for (std::size_t g = 0; g < r.histogram.size(); ++g) {
        if (r.histogram[g] != 0) hist[std::to_string(g)] = r.histogram[g];
    }
    Json j{{"n", r.n},
           {"sample_count", r.sample_count},
           {"seed", r.seed},
           {"rng", "xoshiro256** per sample, seeded by splitmix64(mix64(mix64(seed) + index))"},
           {"histogram", hist},
           {"empirical_mean", r.empirical_mean},
           {"empirical_variance", r.empirical_variance}};
    if (r.exact) {
        j["exact"] = Json{{"mean", r.exact->exact_mean},
                          {"variance", r.exact->exact_variance},
                          {"tv_distance", r.exact->tv_distance},
                          {"mean_z", r.exact->mean_z}};
    }
    if (r.llt) {
        j["llt"] = Json{{"mean", r.llt->model_mean},
                        {"variance", r.llt->model_variance},
                        {"asymptotic_mean", r.llt->asymptotic_mean},
                        {"tv_distance", r.llt->tv_distance}};
    }
    return j;
}

Json to_json(const FaceCensus& c) {
    Json hist = Json::object();
    for (std::size_t k = 0; k < c.face_histogram.size(); ++k) {
        if (c.face_histogram[k] != 0) hist[std::to_string(k)] = c.face_histogram[k];
    }
    return Json{{"n", c.n},
                {"sample_count", c.sample_count},
                {"seed", c.seed},
                {"face_histogram", hist},
                {"largest_face", Json{{"min", c.largest_face_min},
                                      {"median", c.largest_face_median},
                                      {"mean", c.largest_face_mean},
                                      {"max", c.largest_face_max}}},
                {"n_over_ln_n", c.n_over_ln_n}};
}

Json to_json(const EnumerationResult& r) {
    Json genus = Json::object();
    for (std::size_t g = 0; g < r.genus_histogram.size(); ++g) genus[std::to_string(g)] = r.genus_histogram[g];
    Json faces = Json::object();
    for (std::size_t k = 1; k < r.face_histogram.size(); ++k) {
        if (r.face_histogram[k] != 0) faces[std::to_string(k)] = r.face_histogram[k];
    }
    return Json{{"n", r.n}, {"diagram_count", r.diagram_count}, {"genus_histogram", genus}, {"face_histogram", faces}};
}

void write_csv(std::ostream& os, const GenusDistribution& d) {
    os << "g,count,probability\n";
    for (std::size_t g = 0; g < d.counts.size(); ++g) {
        os << g << ',' << d.counts[g].get_str() << ',' << format_double(d.probability(g).get_d()) << '\n';
    }
}

void write_csv(std::ostream& os, const FaceDistribution& d) {
    os << "k,probability_exact,probability\n";
    for (std::size_t k = 1; k < d.probs.size(); ++k) {
        os << k << ',' << format_rational(d.probs[k]) << ',' << format_double(d.probs[k].get_d()) << '\n';
    }
}

void write_csv(std::ostream& os, const LltComparison& c) {
    os << "g,p_exact,p_llt,ratio\n";
    for (const auto& r : c.rows) {
        os << r.g << ',' << format_double(r.p_exact) << ',' << format_double(r.p_llt) << ','
           << format_double(r.ratio) << '\n';
    }
}

void write_csv(std::ostream& os, const SampleReport& r) {
    os << "g,count,frequency\n";
    const double n = static_cast<double>(r.sample_count);
    for (std::size_t g = 0; g < r.histogram.size(); ++g) {
        os << g << ',' << r.histogram[g] << ',' << format_double(static_cast<double>(r.histogram[g]) / n) << '\n';
    }
}

void write_csv(std::ostream& os, const FaceCensus& c) {
    os << "k,count,frequency\n";
    const double n = static_cast<double>(c.sample_count);
    for (std::size_t k = 1; k < c.face_histogram.size(); ++k) {
        os << k << ',' << c.face_histogram[k] << ','
           << format_double(static_cast<double>(c.face_histogram[k]) / n) << '\n';
    }
}

void write_csv(std::ostream& os, const EnumerationResult& r) {
    os << "g,count\n";
    for (std::size_t g = 0; g < r.genus_histogram.size(); ++g) os << g << ',' << r.genus_histogram[g] << '\n';
}

} // namespace genusdist
