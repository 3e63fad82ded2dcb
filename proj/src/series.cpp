#include "genusdist/series.hpp"

#include "genusdist/errors.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace genusdist {

namespace {

// Series rescaled to integer numerators over one common denominator.
struct IntegerForm {
    std::vector<BigInt> num;
    std::vector<std::size_t> support;  // indices with num != 0
    BigInt den;
};

IntegerForm to_integer_form(const std::vector<Rational>& c, std::size_t len) {
    IntegerForm f;
    f.den = 1;
    for (std::size_t k = 0; k < len; ++k) {
        if (sgn(c[k]) != 0) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c[k].get_den_mpz_t());
    }
    f.num.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
        if (sgn(c[k]) == 0) continue;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), f.den.get_mpz_t(), c[k].get_den_mpz_t());
        f.num[k] = q * c[k].get_num();
        f.support.push_back(k);
    }
    return f;
}

Rational reduced(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// A series being filled in one coefficient at a time, kept as integer
// numerators over a running common denominator so that the convolutions in
// coefficient recurrences are plain integer multiply-adds.
class GrowingSeries {
public:
    explicit GrowingSeries(std::size_t capacity) { scaled_.reserve(capacity); }

    void push(const Rational& c) {
        const mpz_srcptr den = c.get_den_mpz_t();
        if (mpz_divisible_p(common_.get_mpz_t(), den) == 0) {
            BigInt next;
            mpz_lcm(next.get_mpz_t(), common_.get_mpz_t(), den);
            BigInt ratio;
            mpz_divexact(ratio.get_mpz_t(), next.get_mpz_t(), common_.get_mpz_t());
            for (auto& x : scaled_) x *= ratio;
            common_ = std::move(next);
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), common_.get_mpz_t(), den);
        scaled_.push_back(q * c.get_num());
    }

    std::size_t size() const noexcept { return scaled_.size(); }
    const BigInt& scaled(std::size_t i) const { return scaled_[i]; }
    const BigInt& common_denominator() const noexcept { return common_; }

private:
    std::vector<BigInt> scaled_;
    BigInt common_ = 1;
};

} // namespace

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::constant(const Rational& c, std::size_t order) {
    RationalSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

RationalSeries RationalSeries::monomial(std::size_t power, const Rational& c, std::size_t order) {
    RationalSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

std::optional<std::size_t> RationalSeries::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return k;
    }
    return std::nullopt;
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw InputError("cannot extend a series known to order " + std::to_string(this->order()) +
                         " to order " + std::to_string(order));
    }
    return RationalSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

RationalSeries RationalSeries::shifted_down(std::size_t k) const {
    if (k > order()) throw InputError("shift exceeds series order");
    return RationalSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()), order() - k);
}

RationalSeries RationalSeries::derivative() const {
    if (order() == 0) return RationalSeries(0);
    RationalSeries d(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k) d.coeffs_[k - 1] = coeffs_[k] * Rational(k);
    return d;
}

RationalSeries RationalSeries::integral() const {
    RationalSeries s(order() + 1);
    for (std::size_t k = 0; k <= order(); ++k) s.coeffs_[k + 1] = coeffs_[k] / Rational(k + 1);
    return s;
}

RationalSeries RationalSeries::scaled_argument(const Rational& c) const {
    RationalSeries s(*this);
    Rational p = 1;
    for (std::size_t k = 0; k <= order(); ++k) {
        s.coeffs_[k] *= p;
        p *= c;
    }
    return s;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

RationalSeries& RationalSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t t = std::min(a.order(), b.order());
    RationalSeries s(t);
    for (std::size_t k = 0; k <= t; ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t t = std::min(a.order(), b.order());
    RationalSeries s(t);
    for (std::size_t k = 0; k <= t; ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return s;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    if (&a == &b) return square(a);
    const std::size_t t = std::min(a.order(), b.order());
    const IntegerForm fa = to_integer_form(a.coeffs_, t + 1);
    const IntegerForm fb = to_integer_form(b.coeffs_, t + 1);
    const BigInt den = fa.den * fb.den;

    RationalSeries s(t);
    BigInt acc;
    for (std::size_t k = 0; k <= t; ++k) {
        acc = 0;
        for (std::size_t i : fa.support) {
            if (i > k) break;
            const BigInt& bj = fb.num[k - i];
            if (sgn(bj) != 0) mpz_addmul(acc.get_mpz_t(), fa.num[i].get_mpz_t(), bj.get_mpz_t());
        }
        if (sgn(acc) != 0) s.coeffs_[k] = reduced(acc, den);
    }
    return s;
}

RationalSeries operator*(const RationalSeries& a, const Rational& c) {
    RationalSeries s(a);
    s *= c;
    return s;
}

RationalSeries operator*(const Rational& c, const RationalSeries& a) { return a * c; }

bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coeffs_ == b.coeffs_; }

void RationalSeries::dump(std::ostream& os) const {
    for (std::size_t k = 0; k <= order(); ++k) {
        os << k << ' ' << coeffs_[k].get_num() << '/' << coeffs_[k].get_den() << '\n';
    }
}

RationalSeries square(const RationalSeries& s) {
    const std::size_t t = s.order();
    const IntegerForm f = to_integer_form(s.coeffs(), t + 1);
    const BigInt den = f.den * f.den;

    std::vector<Rational> out(t + 1);
    BigInt cross, acc;
    for (std::size_t k = 0; k <= t; ++k) {
        cross = 0;
        acc = 0;
        for (std::size_t i : f.support) {
            if (2 * i >= k) {
                if (2 * i == k) mpz_addmul(acc.get_mpz_t(), f.num[i].get_mpz_t(), f.num[i].get_mpz_t());
                break;
            }
            const BigInt& bj = f.num[k - i];
            if (sgn(bj) != 0) mpz_addmul(cross.get_mpz_t(), f.num[i].get_mpz_t(), bj.get_mpz_t());
        }
        acc += 2 * cross;
        if (sgn(acc) != 0) out[k] = reduced(acc, den);
    }
    return RationalSeries(std::move(out), t);
}

RationalSeries pow(const RationalSeries& s, unsigned long m) {
    RationalSeries result = RationalSeries::constant(1, s.order());
    if (m == 0) return result;
    RationalSeries base = s;
    bool first = true;
    while (true) {
        if (m & 1UL) {
            result = first ? base : result * base;
            first = false;
        }
        m >>= 1;
        if (m == 0) break;
        base = square(base);
    }
    return result;
}

RationalSeries pow_by_recurrence(const RationalSeries& s, unsigned long m) {
    if (sgn(s[0]) == 0) return pow(s, m);
    const std::size_t t = s.order();
    // f = s^m satisfies s f' = m s' f, so
    // k s_0 f_k = sum_{j=1}^{k} ((m+1) j - k) s_j f_{k-j}.
    const IntegerForm fs = to_integer_form(s.coeffs(), t + 1);
    GrowingSeries f(t + 1);
    std::vector<Rational> out(t + 1);
    out[0] = 1;
    for (unsigned long e = 0; e < m; ++e) out[0] *= s[0];
    f.push(out[0]);
    const BigInt m1 = BigInt(m) + 1;
    BigInt acc, weight;
    for (std::size_t k = 1; k <= t; ++k) {
        acc = 0;
        for (std::size_t j : fs.support) {
            if (j > k) break;
            if (j == 0) continue;
            weight = m1 * j - k;
            if (sgn(weight) == 0) continue;
            weight *= fs.num[j];
            mpz_addmul(acc.get_mpz_t(), weight.get_mpz_t(), f.scaled(k - j).get_mpz_t());
        }
        Rational fk;
        if (sgn(acc) != 0) {
            fk = reduced(acc, fs.den * f.common_denominator() * k);
            fk /= s[0];
        }
        f.push(fk);
        out[k] = std::move(fk);
    }
    return RationalSeries(std::move(out), t);
}

RationalSeries div(const RationalSeries& num, const RationalSeries& den) {
    const auto vd = den.valuation();
    if (!vd) throw DivisionByZeroSeries("denominator series is zero to order " + std::to_string(den.order()));
    const std::size_t t = std::min(num.order(), den.order());
    if (*vd > t) throw NonCancellingValuation("denominator valuation exceeds the common order");
    const auto vn = num.truncated(t).valuation();
    if (vn && *vn < *vd) {
        throw NonCancellingValuation("denominator valuation " + std::to_string(*vd) +
                                     " exceeds numerator valuation " + std::to_string(*vn));
    }
    const RationalSeries n = num.truncated(t).shifted_down(*vd);
    const RationalSeries d = den.truncated(t).shifted_down(*vd);
    const std::size_t r = t - *vd;

    // q_k = (n_k - sum_{j>=1} d_j q_{k-j}) / d_0
    const IntegerForm fd = to_integer_form(d.coeffs(), r + 1);
    const Rational inv_d0 = 1 / d[0];
    GrowingSeries q(r + 1);
    std::vector<Rational> out(r + 1);
    BigInt acc;
    for (std::size_t k = 0; k <= r; ++k) {
        acc = 0;
        for (std::size_t j : fd.support) {
            if (j > k) break;
            if (j == 0) continue;
            mpz_addmul(acc.get_mpz_t(), fd.num[j].get_mpz_t(), q.scaled(k - j).get_mpz_t());
        }
        Rational qk = n[k];
        if (sgn(acc) != 0) qk -= reduced(acc, fd.den * q.common_denominator());
        qk *= inv_d0;
        q.push(qk);
        out[k] = std::move(qk);
    }
    return RationalSeries(std::move(out), r);
}

RationalSeries log_one_plus(const RationalSeries& s) {
    if (sgn(s[0]) != 0) throw NonzeroConstantTerm("log_one_plus needs a zero constant term");
    if (s.order() == 0) return RationalSeries(0);
    const RationalSeries one_plus = RationalSeries::constant(1, s.order()) + s;
    return div(s.derivative(), one_plus.truncated(s.order() - 1)).integral();
}

RationalSeries odd_harmonic_series(std::size_t order) {
    RationalSeries s(order);
    for (std::size_t j = 1; j <= order; j += 2) s[j] = Rational(1, j);
    return s;
}

RationalSeries log_ratio_series(std::size_t order) {
    return odd_harmonic_series(order) * Rational(2);
}

RationalSeries standard_series(StandardSeries which, std::size_t order) {
    auto exp_part = [](std::size_t t, std::size_t parity) {
        RationalSeries s(t);
        BigInt fact = 1;
        for (std::size_t k = 0; k <= t; ++k) {
            if (k > 0) fact *= k;
            if (k % 2 == parity) s[k] = Rational(BigInt(1), fact);
        }
        return s;
    };
    switch (which) {
    case StandardSeries::Sinh:
        return exp_part(order, 1);
    case StandardSeries::Cosh:
        return exp_part(order, 0);
    case StandardSeries::TanhHalf: {
        const Rational half(1, 2);
        return div(exp_part(order, 1).scaled_argument(half), exp_part(order, 0).scaled_argument(half));
    }
    case StandardSeries::TOverTanhHalf: {
        // ((t/2) cosh(t/2)) / sinh(t/2); both sides vanish to first order.
        const Rational half(1, 2);
        const std::size_t t = order + 1;
        const RationalSeries num =
            RationalSeries::monomial(1, half, t) * exp_part(t, 0).scaled_argument(half);
        return div(num, exp_part(t, 1).scaled_argument(half));
    }
    }
    throw UnknownSeriesName("unknown series");
}

RationalSeries standard_series(std::string_view name, std::size_t order) {
    if (name == "sinh") return standard_series(StandardSeries::Sinh, order);
    if (name == "cosh") return standard_series(StandardSeries::Cosh, order);
    if (name == "tanh_half") return standard_series(StandardSeries::TanhHalf, order);
    if (name == "t_over_tanh_half") return standard_series(StandardSeries::TOverTanhHalf, order);
    throw UnknownSeriesName("unknown series name '" + std::string(name) + "'");
}

} // namespace genusdist
