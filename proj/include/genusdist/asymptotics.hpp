#pragma once

#include "genusdist/exact.hpp"

#include <cstddef>
#include <vector>

namespace genusdist {

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kDefaultAlpha = 0.1;

/// Root of (1+t)/t * sinh t = n + 1 and the genus centre it determines.
struct StationaryPoint {
    std::size_t n = 0;
    double t_bar = 0;         // solver root
    double t_bar_approx = 0;  // ln(2n) - 1/ln(2n)
    double g_bar = 0;         // (n - t_bar) / 2
    double residual = 0;      // |(1+t)/t sinh t - (n+1)| at t_bar
    int iterations = 0;
};

/// Gaussian approximation to G_n: mean g_bar, variance (ln n)/4.
struct LltModel {
    std::size_t n = 0;
    double mean = 0;
    double variance = 0;
    double alpha = kDefaultAlpha;
    double window_exponent = 0.7 - kDefaultAlpha;

    double sd() const;
    /// (ln n)^(7/10 - alpha): the range |g - g_bar| where the approximation is claimed.
    double window_halfwidth() const;
    bool in_window(double g) const;
};

/// (1+t)/t * sinh t - (n+1).
double saddle_function(double t, std::size_t n);
double saddle_derivative(double t);

/**
 * Safeguarded Newton from ln(2n) inside the bracket [1e-3, 3 ln(2n)], falling
 * back to bisection whenever a step leaves the bracket. Throws NoConvergence
 * if the residual is not below 1e-10 (n+1) after the iteration cap.
 */
StationaryPoint solve_saddle(std::size_t n);

LltModel make_llt_model(std::size_t n, double alpha = kDefaultAlpha);

/// Gaussian main term exp(-(g - mean)^2 / (2 var)) / sqrt(2 pi var).
double llt_density(const LltModel& model, double g);

/// Gaussian mass of the unit bin [g - 1/2, g + 1/2].
double llt_bin_mass(const LltModel& model, double g);

/// n/2 - (ln n)/2 + (1 - ln 2 - gamma)/2.
double asymptotic_mean(std::size_t n);

/// ln n + ln 2 + gamma, the leading behaviour of E[n + 1 - 2 G_n].
double asymptotic_face_mean(std::size_t n);

struct LltComparisonRow {
    std::size_t g;
    double p_exact;
    double p_llt;
    double ratio;  // p_exact / p_llt
};

struct LltComparison {
    LltModel model;
    StationaryPoint saddle;
    std::vector<LltComparisonRow> rows;  // g inside the window
    double tv_distance = 0;              // exact pmf vs unit-bin Gaussian over all integers
    double window_mass = 0;              // exact mass inside the window
};

LltComparison compare_exact_vs_llt(const GenusDistribution& exact, double alpha = kDefaultAlpha);
LltComparison compare_exact_vs_llt(std::size_t n, double alpha = kDefaultAlpha);

} // namespace genusdist
