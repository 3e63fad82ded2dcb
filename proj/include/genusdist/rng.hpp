#pragma once

#include <array>
#include <cstdint>

namespace genusdist {

/// SplitMix64 (Vigna 2015); used to seed and to derive substreams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// The SplitMix64 output function applied to a single word.
std::uint64_t mix64(std::uint64_t x);

/**
 * xoshiro256** 1.0 (Blackman and Vigna 2018), seeded from SplitMix64.
 *
 * Sample i of a run with seed s draws from substream(s, i), whose state is
 * four SplitMix64 outputs started at mix64(mix64(s) + i). Results therefore
 * depend only on (seed, sample index), never on how samples are split
 * across threads.
 */
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed);

    static Xoshiro256ss substream(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()();

    /// Uniform on [0, bound) by rejection; bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

private:
    std::array<std::uint64_t, 4> s_{};
};

} // namespace genusdist
