#include "genusdist/rng.hpp"

namespace genusdist {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
}

Xoshiro256ss Xoshiro256ss::substream(std::uint64_t seed, std::uint64_t index) {
    return Xoshiro256ss(mix64(mix64(seed) + index));
}

Xoshiro256ss::result_type Xoshiro256ss::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256ss::uniform_below(std::uint64_t bound) {
    // smallest multiple-of-bound cutoff: values below it are rejected
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = (*this)();
        if (r >= threshold) return r % bound;
    }
}

} // namespace genusdist
