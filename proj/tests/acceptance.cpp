#include "genusdist/asymptotics.hpp"
#include "genusdist/diagram.hpp"
#include "genusdist/enumerate.hpp"
#include "genusdist/exact.hpp"
#include "genusdist/report.hpp"
#include "genusdist/sampler.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace genusdist;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
}

std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = std::string("\"") + GENUSDIST_CLI_PATH + "\" " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Rational frac(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

int main() {
    criterion(1, "n = 3 counts", [] {
        const auto d = genus_distribution(3);
        const bool ok = hz_count(3, 0) == 5 && hz_count(3, 1) == 10 && d.total == 15 &&
                        d.total == double_factorial_odd(3) && d.counts.size() == 2;
        return Outcome{ok, "c(3,0)=" + hz_count(3, 0).get_str() + " c(3,1)=" + hz_count(3, 1).get_str() +
                               " total=" + d.total.get_str()};
    });

    criterion(2, "exact pmf equals brute-force census for n <= 7", [] {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto exact = genus_distribution(n);
            const auto brute = census(n);
            if (exact.counts.size() != brute.genus_histogram.size() || exact.total != brute.diagram_count) {
                return Outcome{false, "size mismatch at n=" + std::to_string(n)};
            }
            for (std::size_t g = 0; g < exact.counts.size(); ++g) {
                if (exact.counts[g] != brute.genus_histogram[g]) {
                    return Outcome{false, "mismatch at n=" + std::to_string(n) + " g=" + std::to_string(g)};
                }
            }
        }
        return Outcome{true, "n = 1..7 coordinatewise"};
    });

    criterion(3, "one-face probability 1/(n+1) for even n <= 20", [] {
        for (std::size_t n = 2; n <= 20; n += 2) {
            const Rational want(1, n + 1);
            const Rational from_counts = frac(hz_count(n, n / 2), double_factorial_odd(n));
            const Rational from_faces = face_distribution(n).probability(1);
            if (from_counts != want || from_faces != want || one_face_probability(n) != want) {
                return Outcome{false, "n=" + std::to_string(n) + " counts " + from_counts.get_str() + " faces " +
                                          from_faces.get_str()};
            }
        }
        return Outcome{true, "both routes exact"};
    });

    criterion(4, "normalization and Catalan genus-0 counts for n <= 50", [] {
        for (std::size_t n = 1; n <= 50; ++n) {
            const auto d = genus_distribution(n);
            const BigInt sum = std::accumulate(d.counts.begin(), d.counts.end(), BigInt(0));
            if (sum != double_factorial_odd(n)) return Outcome{false, "sum wrong at n=" + std::to_string(n)};
            if (d.counts[0] != catalan(n)) return Outcome{false, "genus 0 wrong at n=" + std::to_string(n)};
        }
        return Outcome{true, "n = 1..50"};
    });

    criterion(5, "generating-function identity to x^8, y^8", [] {
        const auto r = verify_hz_identity(8, 8);
        std::string detail = std::to_string(r.terms_checked) + " terms";
        if (r.first_mismatch) {
            detail += ", first mismatch at x^" + std::to_string(r.first_mismatch->x_power) + " y^" +
                      std::to_string(r.first_mismatch->y_power);
        }
        return Outcome{r.holds(), detail};
    });

    criterion(6, "face-count mean vs ln n + ln 2 + gamma", [] {
        std::ostringstream detail;
        bool ok = true;
        double first = 0, last = 0;
        for (const std::size_t n : {50UL, 100UL, 200UL, 400UL}) {
            const double exact = factorial_moment(n, 1).get_d();
            const double scaled = std::abs(exact - asymptotic_face_mean(n)) * std::log(static_cast<double>(n));
            if (n == 50) first = scaled;
            last = scaled;
            ok = ok && scaled <= 2.0;
            detail << "n=" << n << ":" << format_double(scaled) << " ";
        }
        // not exploding: the scaled error at 400 is no larger than twice that at 50
        ok = ok && last <= 2 * first + 1e-12;
        return Outcome{ok, detail.str() + "bound 2"};
    });

    criterion(7, "saddle residual and root approximation", [] {
        std::ostringstream detail;
        bool ok = true;
        double worst = 0;
        for (double x = std::log10(2.0); x <= 6.0 + 1e-9; x += 0.125) {
            const auto n = static_cast<std::size_t>(std::llround(std::pow(10.0, x)));
            const auto sp = solve_saddle(n);
            const double rel = sp.residual / static_cast<double>(n + 1);
            worst = std::max(worst, rel);
            ok = ok && sp.residual < 1e-10 * static_cast<double>(n + 1);
        }
        detail << "max residual/(n+1)=" << format_double(worst) << "; scaled gap";
        for (const std::size_t n : {1000UL, 10000UL, 100000UL, 1000000UL}) {
            const auto sp = solve_saddle(n);
            const double ln = std::log(static_cast<double>(n));
            const double scaled = std::abs(sp.t_bar - sp.t_bar_approx) * ln * ln;
            ok = ok && scaled <= 1.0;
            detail << " " << format_double(scaled);
        }
        return Outcome{ok, detail.str() + " (bound 1)"};
    });

    criterion(8, "Gaussian TV trend and window mass", [] {
        std::ostringstream detail;
        bool ok = true;
        double prev = 2.0;
        double mass = 0;
        for (const std::size_t n : {100UL, 500UL, 2000UL}) {
            const auto cmp = compare_exact_vs_llt(n);
            ok = ok && cmp.tv_distance <= prev;
            prev = cmp.tv_distance;
            mass = cmp.window_mass;
            detail << "TV(" << n << ")=" << format_double(cmp.tv_distance) << " ";
        }
        ok = ok && mass >= 0.99;
        detail << "window mass(2000)=" << format_double(mass);
        return Outcome{ok, detail.str()};
    });

    criterion(9, "sampler statistics and thread independence", [] {
        std::ostringstream detail;
        SamplerOptions opt;
        opt.compare_exact = true;
        const auto r = monte_carlo(200, 100000, 20261016, opt);
        const auto [mean, var] = exact_mean_variance(200);
        const double bound = 4 * std::sqrt(var.get_d()) / std::sqrt(1e5);
        const double gap = std::abs(r.empirical_mean - mean.get_d());
        bool ok = gap <= bound;
        detail << "mean gap " << format_double(gap) << " <= " << format_double(bound);

        std::map<std::string, std::uint64_t> seen;
        const std::uint64_t total = 1000000;
        for (std::uint64_t i = 0; i < total; ++i) {
            auto rng = Xoshiro256ss::substream(20261016, i);
            ++seen[to_word_string(sample_diagram(3, rng))];
        }
        double stat = 0;
        const double expected = static_cast<double>(total) / 15;
        for (const auto& [w, c] : seen) stat += (c - expected) * (c - expected) / expected;
        const double p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(14), stat));
        ok = ok && seen.size() == 15 && p > 1e-6;
        detail << "; chi2=" << format_double(stat) << " p=" << format_double(p);

        const std::string one = to_json(r).dump();
        for (unsigned threads : {2U, 4U, 0U}) {
            opt.threads = threads;
            ok = ok && to_json(monte_carlo(200, 100000, 20261016, opt)).dump() == one;
        }
        detail << "; threads 1/2/4/auto identical=" << (ok ? "yes" : "check");
        return Outcome{ok, detail.str()};
    });

    criterion(10, "CLI output is byte-identical across runs", [] {
        const std::vector<std::string> commands = {
            "count --n 10 --g 3",
            "pmf --n 12",
            "pmf --n 12 --format csv",
            "faces --n 9",
            "faces --n 9 --format csv",
            "moments --n 20 --k 2",
            "mean-var --n 30",
            "mean-var --n 30 --format csv",
            "saddle --n 1000",
            "llt-compare --n 100",
            "llt-compare --n 100 --format csv",
            "sample --n 50 --N 20000 --seed 11 --compare-exact",
            "sample --n 50 --N 20000 --seed 11 --format csv --threads 3",
            "face-census --n 40 --N 2000 --seed 5",
            "face-census --n 40 --N 2000 --seed 5 --format csv",
            "enumerate --n 6",
            "enumerate --n 6 --format csv",
            "genus --word abcabc",
            "verify-hz --N 6 --Y 6",
        };
        for (const auto& c : commands) {
            int s1 = 0, s2 = 0;
            const std::string a = run_cli(c, s1), b = run_cli(c, s2);
            if (s1 != 0 || s2 != 0 || a != b || a.empty()) return Outcome{false, "differs or failed: " + c};
        }
        return Outcome{true, std::to_string(commands.size()) + " invocations, each run twice"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
