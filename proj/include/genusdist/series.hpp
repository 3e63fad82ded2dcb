#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace genusdist {

using BigInt = mpz_class;
using Rational = mpq_class;

/**
 * Truncated formal power series with exact rational coefficients.
 *
 * A series of order T carries the coefficients of x^0 .. x^T; everything
 * above x^T is unknown, not zero. Binary operations truncate to the smaller
 * order of their operands, so the coefficient at x^k of any result depends
 * only on operand coefficients at powers <= k.
 */
class RationalSeries {
public:
    /// The zero series known to order `order`.
    explicit RationalSeries(std::size_t order = 0);

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    RationalSeries(std::vector<Rational> coeffs, std::size_t order);

    static RationalSeries constant(const Rational& c, std::size_t order);
    static RationalSeries monomial(std::size_t power, const Rational& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// Coefficient at x^k; zero-valued reference past the order is an error.
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Lowest power with a nonzero coefficient, or nullopt if zero to this order.
    std::optional<std::size_t> valuation() const;

    bool is_zero() const { return !valuation().has_value(); }

    RationalSeries truncated(std::size_t order) const;

    /// Divides by x^k; the result is known to order() - k.
    RationalSeries shifted_down(std::size_t k) const;

    /// Formal derivative, known to order() - 1 (order 0 input gives the zero series of order 0).
    RationalSeries derivative() const;

    /// Formal antiderivative with zero constant term, known to order() + 1.
    RationalSeries integral() const;

    /// Substitutes x -> c*x.
    RationalSeries scaled_argument(const Rational& c) const;

    RationalSeries operator-() const;
    RationalSeries& operator*=(const Rational& c);

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const Rational& c);
    friend RationalSeries operator*(const Rational& c, const RationalSeries& a);

    friend bool operator==(const RationalSeries& a, const RationalSeries& b);

    /// One line per coefficient: "power numerator/denominator".
    void dump(std::ostream& os) const;

private:
    std::vector<Rational> coeffs_;
};

RationalSeries square(const RationalSeries& s);

/// s^m by binary exponentiation; pow(s, 0) is the constant 1.
RationalSeries pow(const RationalSeries& s, unsigned long m);

/**
 * s^m in one pass from the identity s (s^m)' = m s' s^m. Agrees with pow()
 * coefficient for coefficient; much cheaper for large m. Falls back to pow()
 * when s has no constant term.
 */
RationalSeries pow_by_recurrence(const RationalSeries& s, unsigned long m);

/**
 * Exact quotient num/den.
 *
 * A common factor x^v (v = valuation of den) is cancelled first, so
 * (x*a)/(x*b) is fine even though x*b has no constant term. The result is
 * known to min(order(num), order(den)) - v.
 */
RationalSeries div(const RationalSeries& num, const RationalSeries& den);

/// ln(1 + s) for s with zero constant term.
RationalSeries log_one_plus(const RationalSeries& s);

/// ln((1+x)/(1-x)) = 2(x + x^3/3 + x^5/5 + ...), to order T.
RationalSeries log_ratio_series(std::size_t order);

/// sum over odd j <= T of x^j / j.
RationalSeries odd_harmonic_series(std::size_t order);

enum class StandardSeries { Sinh, Cosh, TanhHalf, TOverTanhHalf };

/// Taylor series of sinh t, cosh t, tanh(t/2), or (t/2)/tanh(t/2), to order T.
RationalSeries standard_series(StandardSeries which, std::size_t order);

/// Name lookup: "sinh", "cosh", "tanh_half", "t_over_tanh_half".
RationalSeries standard_series(std::string_view name, std::size_t order);

} // namespace genusdist
