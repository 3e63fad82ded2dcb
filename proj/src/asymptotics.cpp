#include "genusdist/asymptotics.hpp"

#include "genusdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace genusdist {

namespace {

constexpr int kMaxIterations = 200;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

} // namespace

double LltModel::sd() const { return std::sqrt(variance); }

double LltModel::window_halfwidth() const {
    return std::pow(std::log(static_cast<double>(n)), window_exponent);
}

bool LltModel::in_window(double g) const { return std::abs(g - mean) <= window_halfwidth(); }

double saddle_function(double t, std::size_t n) {
    return (1.0 + t) / t * std::sinh(t) - static_cast<double>(n + 1);
}

double saddle_derivative(double t) {
    return (1.0 + t) / t * std::cosh(t) - std::sinh(t) / (t * t);
}

StationaryPoint solve_saddle(std::size_t n) {
    if (n < 2) throw InputError("solve_saddle needs n >= 2");
    const double log2n = std::log(2.0 * static_cast<double>(n));
    const double target = static_cast<double>(n + 1);
    const double tol = 1e-12 * target;

    double lo = 1e-3;
    double hi = 3.0 * log2n;
    if (saddle_function(lo, n) >= 0 || saddle_function(hi, n) <= 0) {
        std::ostringstream msg;
        msg << "saddle bracket [" << lo << ", " << hi << "] does not enclose the root for n = " << n;
        throw NoConvergence(msg.str());
    }

    double t = log2n;
    double f = saddle_function(t, n);
    int it = 0;
    for (; it < kMaxIterations && std::abs(f) > tol; ++it) {
        if (f < 0) lo = t; else hi = t;
        double next = t - f / saddle_derivative(t);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == t) break;
        t = next;
        f = saddle_function(t, n);
    }

    StationaryPoint sp;
    sp.n = n;
    sp.t_bar = t;
    sp.t_bar_approx = log2n - 1.0 / log2n;
    sp.g_bar = (static_cast<double>(n) - t) / 2.0;
    sp.residual = std::abs(f);
    sp.iterations = it;
    if (sp.residual > 1e-10 * target) {
        std::ostringstream msg;
        msg << "saddle solver stalled for n = " << n << " with bracket [" << lo << ", " << hi
            << "], residual " << sp.residual;
        throw NoConvergence(msg.str());
    }
    return sp;
}

LltModel make_llt_model(std::size_t n, double alpha) {
    if (n < 2) throw InputError("the Gaussian model needs n >= 2");
    if (!(alpha > 0.0 && alpha < 0.7)) throw InputError("alpha must lie in (0, 0.7)");
    LltModel m;
    m.n = n;
    m.mean = solve_saddle(n).g_bar;
    m.variance = std::log(static_cast<double>(n)) / 4.0;
    m.alpha = alpha;
    m.window_exponent = 0.7 - alpha;
    return m;
}

double llt_density(const LltModel& model, double g) {
    const double d = g - model.mean;
    return std::exp(-d * d / (2.0 * model.variance)) / std::sqrt(2.0 * std::numbers::pi * model.variance);
}

double llt_bin_mass(const LltModel& model, double g) {
    const double s = model.sd();
    return normal_cdf((g + 0.5 - model.mean) / s) - normal_cdf((g - 0.5 - model.mean) / s);
}

double asymptotic_mean(std::size_t n) {
    const double x = static_cast<double>(n);
    return x / 2.0 - std::log(x) / 2.0 + (1.0 - std::numbers::ln2 - kEulerGamma) / 2.0;
}

double asymptotic_face_mean(std::size_t n) {
    return std::log(static_cast<double>(n)) + std::numbers::ln2 + kEulerGamma;
}

LltComparison compare_exact_vs_llt(const GenusDistribution& exact, double alpha) {
    LltComparison cmp;
    cmp.model = make_llt_model(exact.n, alpha);
    cmp.saddle = solve_saddle(exact.n);

    const std::vector<double> p = exact.probabilities();
    double abs_diff = 0;
    double q_support = 0;
    for (std::size_t g = 0; g < p.size(); ++g) {
        const double gd = static_cast<double>(g);
        const double q = llt_bin_mass(cmp.model, gd);
        abs_diff += std::abs(p[g] - q);
        q_support += q;
        if (cmp.model.in_window(gd)) {
            cmp.window_mass += p[g];
            const double dens = llt_density(cmp.model, gd);
            cmp.rows.push_back({g, p[g], dens, p[g] / dens});
        }
    }
    // Gaussian mass on integers outside 0 .. n/2 counts fully toward the distance.
    cmp.tv_distance = 0.5 * (abs_diff + std::max(0.0, 1.0 - q_support));
    return cmp;
}

LltComparison compare_exact_vs_llt(std::size_t n, double alpha) {
    return compare_exact_vs_llt(genus_distribution(n), alpha);
}

} // namespace genusdist
