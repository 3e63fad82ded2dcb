#pragma once

#include "genusdist/series.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace genusdist {

/// Exact genus counts c_{n,g} for all diagrams with n chords.
struct GenusDistribution {
    std::size_t n = 0;
    std::vector<BigInt> counts;  // counts[g], g = 0 .. n/2
    BigInt total;                // (2n-1)!!

    std::size_t max_genus() const noexcept { return n / 2; }
    /// Zero outside 0 <= g <= n/2.
    BigInt count(std::size_t g) const { return g < counts.size() ? counts[g] : BigInt(0); }
    Rational probability(std::size_t g) const;
    std::vector<double> probabilities() const;
};

/// Exact law of the face count F_n = n + 1 - 2 G_n.
struct FaceDistribution {
    std::size_t n = 0;
    std::vector<Rational> probs;  // probs[k], k = 0 .. n+1; probs[0] = 0

    Rational probability(std::size_t k) const { return k < probs.size() ? probs[k] : Rational(0); }
};

struct HzIdentityReport {
    struct Mismatch {
        std::size_t x_power;
        std::size_t y_power;
        Rational counts_side;
        Rational closed_form_side;
    };
    std::size_t x_order = 0;
    std::size_t y_order = 0;
    std::size_t terms_checked = 0;
    std::optional<Mismatch> first_mismatch;

    bool holds() const noexcept { return !first_mismatch.has_value(); }
};

BigInt factorial(std::size_t n);
/// (2n-1)!! = 1 * 3 * ... * (2n-1); 1 for n = 0.
BigInt double_factorial_odd(std::size_t n);
BigInt catalan(std::size_t n);

/**
 * ((t/2)/tanh(t/2))^(n+1) written in u = t^2 and truncated at u^(n/2).
 * Memoized per n for the life of the process; safe to call from several threads.
 */
const RationalSeries& hz_power_series(std::size_t n);

/// c_{n,g}: diagrams with n chords and genus g. Requires 2g <= n.
BigInt hz_count(std::size_t n, std::size_t g);

GenusDistribution genus_distribution(std::size_t n);

/// P(G_n = n/2) = 1/(n+1) for even n, 0 for odd n; cross-checked against the counts.
Rational one_face_probability(std::size_t n);

/// Permutations of [a] made of exactly b cycles, all of odd length.
BigInt odd_cycle_count(std::size_t a, std::size_t b);

/// odd_cycle_count(a, b) for b = 0 .. a in one pass.
std::vector<BigInt> odd_cycle_counts(std::size_t a);

/// P(F_n = k) = 2^(k-1) O_{n+1,k} / (n+1)!.
FaceDistribution face_distribution(std::size_t n);

/// E[(n + 1 - 2 G_n)_k], the k-th falling factorial moment of the face count.
Rational factorial_moment(std::size_t n, std::size_t k);

/// Exact (E[G_n], Var[G_n]) from the first two factorial moments.
std::pair<Rational, Rational> exact_mean_variance(std::size_t n);

/**
 * Checks 1 + 2 sum p_{n,g} x^(n+1) y^(n+1-2g) = ((1+x)/(1-x))^y coefficient by
 * coefficient for x powers <= x_order and y powers <= y_order. The right side
 * is expanded as sum_j y^j (ln((1+x)/(1-x)))^j / j!; the left side comes from
 * genus_distribution. The n = 0 term is the empty diagram: genus 0, probability 1.
 */
HzIdentityReport verify_hz_identity(std::size_t x_order, std::size_t y_order);

} // namespace genusdist
