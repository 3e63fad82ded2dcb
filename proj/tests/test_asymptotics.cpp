#include "genusdist/asymptotics.hpp"
#include "genusdist/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace genusdist;

namespace {

// Plain bisection on the saddle equation.
double bisect_saddle(std::size_t n, double lo, double hi, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (saddle_function(mid, n) < 0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::size_t> log_grid(std::size_t lo, std::size_t hi, int per_decade) {
    std::vector<std::size_t> out;
    for (double x = std::log10(static_cast<double>(lo)); x <= std::log10(static_cast<double>(hi)) + 1e-9;
         x += 1.0 / per_decade) {
        const auto n = static_cast<std::size_t>(std::llround(std::pow(10.0, x)));
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

} // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("saddle solver matches bisection and high-precision values") {
    const auto sp2 = solve_saddle(2);
    CHECK(sp2.t_bar == doctest::Approx(bisect_saddle(2, 0.1, 10.0, 1e-13)).epsilon(1e-12));
    CHECK(std::abs(sp2.t_bar - 1.2980521394694686895) < 1e-12);
    CHECK(std::abs(solve_saddle(10).t_bar - 2.7883545186564836558) < 1e-12);
    CHECK_THROWS_AS(solve_saddle(1), InputError);
}

TEST_CASE("saddle residual is small across scales") {
    for (const std::size_t n : log_grid(2, 1000000, 4)) {
        CAPTURE(n);
        const auto sp = solve_saddle(n);
        CHECK(sp.residual < 1e-10 * static_cast<double>(n + 1));
        CHECK(std::abs(saddle_function(sp.t_bar, n)) < 1e-10 * static_cast<double>(n + 1));
        CHECK(sp.g_bar == doctest::Approx((static_cast<double>(n) - sp.t_bar) / 2));
    }
}

TEST_CASE("saddle function is increasing in t") {
    double prev = saddle_function(1e-3, 100);
    for (double t = 0.01; t < 20; t += 0.01) {
        const double f = saddle_function(t, 100);
        CHECK(f > prev);
        CHECK(saddle_derivative(t) > 0);
        prev = f;
    }
}

TEST_CASE("closed-form approximation of the root improves with n") {
    double prev = 1e300;
    for (const std::size_t n : {1000UL, 10000UL, 100000UL, 1000000UL}) {
        CAPTURE(n);
        const auto sp = solve_saddle(n);
        const double diff = std::abs(sp.t_bar - sp.t_bar_approx);
        const double ln = std::log(static_cast<double>(n));
        CHECK(diff < prev);
        CHECK(diff * ln * ln <= 1.0);
        prev = diff;
        // g_bar = (n - ln n)/2 + O(1)
        CHECK(std::abs(sp.g_bar - (static_cast<double>(n) - ln) / 2) < 1.0);
    }
}

TEST_CASE("Gaussian density and bin masses") {
    const auto m = make_llt_model(100);
    CHECK(m.variance == doctest::Approx(std::log(100.0) / 4));
    CHECK(m.window_halfwidth() == doctest::Approx(std::pow(std::log(100.0), 0.6)));
    CHECK(m.in_window(m.mean));
    CHECK_FALSE(m.in_window(m.mean + 2 * m.window_halfwidth()));

    CHECK(llt_density(m, m.mean) > llt_density(m, m.mean + 0.3));
    CHECK(llt_density(m, m.mean + 1.1) == doctest::Approx(llt_density(m, m.mean - 1.1)));

    double riemann = 0;
    for (int g = 0; g <= 50; ++g) riemann += llt_density(m, g);
    CHECK(std::abs(riemann - 1.0) < 0.05);

    double bins = 0;
    for (int g = 0; g <= 100; ++g) bins += llt_bin_mass(m, g);
    CHECK(std::abs(bins - 1.0) < 1e-9);

    // trapezoid over mean +/- 10 sd
    const int steps = 20000;
    const double a = m.mean - 10 * m.sd(), b = m.mean + 10 * m.sd(), h = (b - a) / steps;
    double trap = 0.5 * (llt_density(m, a) + llt_density(m, b));
    for (int i = 1; i < steps; ++i) trap += llt_density(m, a + i * h);
    CHECK(std::abs(trap * h - 1.0) < 1e-6);

    CHECK_THROWS_AS(make_llt_model(100, 0.0), InputError);
    CHECK_THROWS_AS(make_llt_model(100, 0.7), InputError);
    CHECK_THROWS_AS(make_llt_model(1), InputError);
}

TEST_CASE("exact mean approaches the asymptotic mean") {
    for (const std::size_t n : {50UL, 100UL, 200UL, 400UL}) {
        CAPTURE(n);
        const double exact = exact_mean_variance(n).first.get_d();
        CHECK(std::abs(exact - asymptotic_mean(n)) * std::log(static_cast<double>(n)) <= 1.0);
    }
    const double faces = factorial_moment(400, 1).get_d();
    CHECK(std::abs(faces - asymptotic_face_mean(400)) < 0.5);
}

TEST_CASE("exact pmf against the Gaussian model") {
    for (const std::size_t n : {100UL, 300UL}) {
        CAPTURE(n);
        const auto cmp = compare_exact_vs_llt(n);
        REQUIRE_FALSE(cmp.rows.empty());
        const auto centre = static_cast<std::size_t>(std::llround(cmp.model.mean));
        bool found = false;
        for (const auto& row : cmp.rows) {
            CHECK(row.p_exact > 0);
            if (row.g == centre) {
                found = true;
                CHECK(row.ratio >= 0.5);
                CHECK(row.ratio <= 2.0);
            }
        }
        CHECK(found);
        CHECK(cmp.tv_distance > 0);
        CHECK(cmp.tv_distance < 0.2);
        CHECK(cmp.window_mass > 0.9);
    }
}

}
