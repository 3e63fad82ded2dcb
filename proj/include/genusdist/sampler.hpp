#pragma once

#include "genusdist/asymptotics.hpp"
#include "genusdist/diagram.hpp"
#include "genusdist/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace genusdist {

/**
 * Uniform random chord diagram: repeatedly pair the smallest unmatched
 * endpoint with a uniformly chosen other unmatched endpoint. Every one of the
 * (2n-1)!! diagrams has probability 1/((2n-1)(2n-3)...1).
 */
ChordDiagram sample_diagram(std::size_t n, Xoshiro256ss& rng);

struct SamplerOptions {
    bool compare_exact = false;
    std::size_t exact_limit = 2000;  // largest n for which the exact pmf may be requested
    bool compare_llt = true;         // ignored for n < 2
    double alpha = kDefaultAlpha;
    unsigned threads = 1;            // 0 means hardware concurrency
};

struct ExactSampleComparison {
    double exact_mean = 0;
    double exact_variance = 0;
    double tv_distance = 0;  // empirical pmf vs exact pmf
    double mean_z = 0;       // (empirical - exact mean) / (exact sd / sqrt(N))
};

struct LltSampleComparison {
    double model_mean = 0;
    double model_variance = 0;
    double asymptotic_mean = 0;
    double tv_distance = 0;  // empirical pmf vs unit-bin Gaussian
};

struct SampleReport {
    std::size_t n = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> histogram;  // histogram[g], g = 0 .. n/2
    double empirical_mean = 0;
    double empirical_variance = 0;         // divides by N - 1 (0 when N = 1)
    std::optional<ExactSampleComparison> exact;
    std::optional<LltSampleComparison> llt;
};

/// Deterministic in (n, N, seed) whatever the thread count.
SampleReport monte_carlo(std::size_t n, std::uint64_t sample_count, std::uint64_t seed,
                         const SamplerOptions& options = {});

struct FaceCensus {
    std::size_t n = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> face_histogram;  // face_histogram[k], k = 0 .. n+1
    std::size_t largest_face_min = 0;
    double largest_face_median = 0;
    double largest_face_mean = 0;
    std::size_t largest_face_max = 0;
    double n_over_ln_n = 0;                     // reference scale; 0 for n = 1
};

/// Empirical face counts and largest-face side counts over N samples.
FaceCensus face_census(std::size_t n, std::uint64_t sample_count, std::uint64_t seed, unsigned threads = 1);

} // namespace genusdist
