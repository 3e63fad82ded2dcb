// genusdist: exact and asymptotic statistics of the genus of a random chord diagram.
//
// Exit codes: 0 success, 1 usage or precondition error, 2 computation error.

#include "genusdist/asymptotics.hpp"
#include "genusdist/diagram.hpp"
#include "genusdist/enumerate.hpp"
#include "genusdist/errors.hpp"
#include "genusdist/exact.hpp"
#include "genusdist/report.hpp"
#include "genusdist/sampler.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace genusdist;

enum class Format { Json, Csv };

struct RunConfig {
    Format format = Format::Json;
    unsigned threads = 1;
    std::size_t n = 0;
    std::size_t g = 0;
    std::size_t k = 1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    std::size_t exact_limit = 2000;
    std::size_t enum_limit = kDefaultEnumerationLimit;
    bool compare_exact = false;
    std::string word;
    std::size_t x_order = 8;
    std::size_t y_order = 8;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

template <typename T>
void emit(const RunConfig& cfg, const T& value) {
    if (cfg.format == Format::Csv) {
        write_csv(std::cout, value);
    } else {
        emit(to_json(value));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic statistics of the genus of a random chord diagram"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", cfg.format, "Output format: json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads for sampling and enumeration (0 = all cores)")
        ->capture_default_str();

    auto positive = CLI::PositiveNumber;

    auto* count = app.add_subcommand("count", "Number of n-chord diagrams of genus g");
    count->add_option("--n", cfg.n, "Chords")->required()->check(positive);
    count->add_option("--g", cfg.g, "Genus")->required();

    auto* pmf = app.add_subcommand("pmf", "Exact genus distribution");
    pmf->add_option("--n", cfg.n, "Chords")->required()->check(positive);

    auto* faces_cmd = app.add_subcommand("faces", "Exact face-count distribution");
    faces_cmd->add_option("--n", cfg.n, "Chords")->required()->check(positive);

    auto* moments = app.add_subcommand("moments", "Factorial moment E[(n+1-2G)_k]");
    moments->add_option("--n", cfg.n, "Chords")->required()->check(positive);
    moments->add_option("--k", cfg.k, "Order")->required()->check(positive);

    auto* meanvar = app.add_subcommand("mean-var", "Exact mean and variance of the genus");
    meanvar->add_option("--n", cfg.n, "Chords")->required()->check(positive);

    auto* saddle = app.add_subcommand("saddle", "Stationary point of the genus distribution");
    saddle->add_option("--n", cfg.n, "Chords")->required()->check(CLI::Range(2, 1 << 30));

    auto* llt = app.add_subcommand("llt-compare", "Exact pmf against the Gaussian local approximation");
    llt->add_option("--n", cfg.n, "Chords")->required()->check(CLI::Range(2, 1 << 30));
    llt->add_option("--alpha", cfg.alpha, "Window parameter in (0, 0.7)")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Monte Carlo genus histogram");
    sample->add_option("--n", cfg.n, "Chords")->required()->check(positive);
    sample->add_option("--N", cfg.samples, "Number of samples")->required()->check(positive);
    sample->add_option("--seed", cfg.seed, "64-bit seed")->required();
    sample->add_flag("--compare-exact", cfg.compare_exact, "Also compare with the exact pmf");
    sample->add_option("--exact-limit", cfg.exact_limit, "Largest n for --compare-exact")->capture_default_str();
    sample->add_option("--alpha", cfg.alpha, "Window parameter in (0, 0.7)")->capture_default_str();

    auto* census_cmd = app.add_subcommand("face-census", "Monte Carlo face counts and largest face");
    census_cmd->add_option("--n", cfg.n, "Chords")->required()->check(positive);
    census_cmd->add_option("--N", cfg.samples, "Number of samples")->required()->check(positive);
    census_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force census of all diagrams");
    enumerate_cmd->add_option("--n", cfg.n, "Chords")->required()->check(positive);
    enumerate_cmd->add_option("--limit", cfg.enum_limit, "Largest n allowed")->capture_default_str();

    auto* genus_cmd = app.add_subcommand("genus", "Genus of one diagram given as a word");
    genus_cmd->add_option("--word", cfg.word, "e.g. abab, or '1 2 1 2', or 'a,b,a,b'")->required();

    auto* verify = app.add_subcommand("verify-hz", "Check the bivariate generating-function identity");
    verify->add_option("--N", cfg.x_order, "Largest power of x")->check(positive)->capture_default_str();
    verify->add_option("--Y", cfg.y_order, "Largest power of y")->check(positive)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*count) {
            std::cout << hz_count(cfg.n, cfg.g).get_str() << '\n';
        } else if (*pmf) {
            emit(cfg, genus_distribution(cfg.n));
        } else if (*faces_cmd) {
            emit(cfg, face_distribution(cfg.n));
        } else if (*moments) {
            const Rational m = factorial_moment(cfg.n, cfg.k);
            if (cfg.format == Format::Csv) {
                std::cout << "n,k,factorial_moment,value\n"
                          << cfg.n << ',' << cfg.k << ',' << format_rational(m) << ',' << format_double(m.get_d())
                          << '\n';
            } else {
                emit(Json{{"n", cfg.n}, {"k", cfg.k}, {"factorial_moment", format_rational(m)}, {"value", m.get_d()}});
            }
        } else if (*meanvar) {
            const auto [mean, var] = exact_mean_variance(cfg.n);
            if (cfg.format == Format::Csv) {
                std::cout << "n,mean,variance,mean_value,variance_value\n"
                          << cfg.n << ',' << format_rational(mean) << ',' << format_rational(var) << ','
                          << format_double(mean.get_d()) << ',' << format_double(var.get_d()) << '\n';
            } else {
                Json j{{"n", cfg.n},
                       {"mean", format_rational(mean)},
                       {"variance", format_rational(var)},
                       {"mean_value", mean.get_d()},
                       {"variance_value", var.get_d()}};
                if (cfg.n >= 2) j["asymptotic_mean"] = asymptotic_mean(cfg.n);
                emit(j);
            }
        } else if (*saddle) {
            const StationaryPoint sp = solve_saddle(cfg.n);
            if (cfg.format == Format::Csv) {
                std::cout << "n,t_bar,t_bar_approx,g_bar,residual\n"
                          << sp.n << ',' << format_double(sp.t_bar) << ',' << format_double(sp.t_bar_approx) << ','
                          << format_double(sp.g_bar) << ',' << format_double(sp.residual) << '\n';
            } else {
                emit(to_json(sp));
            }
        } else if (*llt) {
            emit(cfg, compare_exact_vs_llt(cfg.n, cfg.alpha));
        } else if (*sample) {
            SamplerOptions opts;
            opts.compare_exact = cfg.compare_exact;
            opts.exact_limit = cfg.exact_limit;
            opts.alpha = cfg.alpha;
            opts.threads = cfg.threads;
            emit(cfg, monte_carlo(cfg.n, cfg.samples, cfg.seed, opts));
        } else if (*census_cmd) {
            emit(cfg, face_census(cfg.n, cfg.samples, cfg.seed, cfg.threads));
        } else if (*enumerate_cmd) {
            emit(cfg, census(cfg.n, cfg.enum_limit, cfg.threads));
        } else if (*genus_cmd) {
            std::cout << genus(diagram_from_text(cfg.word)) << '\n';
        } else if (*verify) {
            const HzIdentityReport r = verify_hz_identity(cfg.x_order, cfg.y_order);
            if (cfg.format == Format::Csv) {
                std::cout << "x_order,y_order,terms_checked,holds\n"
                          << r.x_order << ',' << r.y_order << ',' << r.terms_checked << ','
                          << (r.holds() ? "true" : "false") << '\n';
            } else {
                emit(to_json(r));
            }
            if (!r.holds()) return 2;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
