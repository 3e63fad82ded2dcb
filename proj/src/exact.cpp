#include "genusdist/exact.hpp"

#include "genusdist/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace genusdist {

namespace {

// Keeps the even coefficients of s, re-indexed by t^2.
RationalSeries even_part_in_square(const RationalSeries& s, std::size_t order) {
    RationalSeries u(order);
    for (std::size_t g = 0; g <= order; ++g) u[g] = s[2 * g];
    return u;
}

Rational to_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Rational GenusDistribution::probability(std::size_t g) const {
    return to_rational(count(g), total);
}

std::vector<double> GenusDistribution::probabilities() const {
    std::vector<double> p(counts.size());
    for (std::size_t g = 0; g < counts.size(); ++g) p[g] = probability(g).get_d();
    return p;
}

BigInt factorial(std::size_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial_odd(std::size_t n) {
    if (n == 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
    return r;
}

BigInt catalan(std::size_t n) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r / (n + 1);
}

const RationalSeries& hz_power_series(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const RationalSeries>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end()) return *it->second;
    }
    const std::size_t half = n / 2;
    const RationalSeries base =
        even_part_in_square(standard_series(StandardSeries::TOverTanhHalf, 2 * half), half);
    auto power = std::make_shared<const RationalSeries>(pow_by_recurrence(base, n + 1));

    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.emplace(n, std::move(power));
    return *it->second;
}

namespace {

BigInt count_from_series(std::size_t n, std::size_t g, const RationalSeries& power) {
    // (2n)! / ((n+1)! (n-2g)!) [t^(2g)] (...)^(n+1)
    const Rational c = Rational(factorial(2 * n)) / Rational(factorial(n + 1) * factorial(n - 2 * g)) * power[g];
    if (c.get_den() != 1) {
        throw NonIntegerCount("c(" + std::to_string(n) + "," + std::to_string(g) + ") came out as " +
                              c.get_str());
    }
    return c.get_num();
}

} // namespace

BigInt hz_count(std::size_t n, std::size_t g) {
    if (n == 0) throw InputError("n must be positive");
    if (2 * g > n) {
        throw GenusOutOfRange("genus " + std::to_string(g) + " out of range for n = " + std::to_string(n));
    }
    return count_from_series(n, g, hz_power_series(n));
}

GenusDistribution genus_distribution(std::size_t n) {
    if (n == 0) throw InputError("n must be positive");
    const RationalSeries& power = hz_power_series(n);
    GenusDistribution d;
    d.n = n;
    d.total = double_factorial_odd(n);
    d.counts.reserve(n / 2 + 1);
    for (std::size_t g = 0; g <= n / 2; ++g) d.counts.push_back(count_from_series(n, g, power));
    return d;
}

Rational one_face_probability(std::size_t n) {
    if (n == 0) throw InputError("n must be positive");
    if (n % 2 != 0) return 0;
    const Rational p(1, n + 1);
    const Rational from_counts = to_rational(hz_count(n, n / 2), double_factorial_odd(n));
    if (from_counts != p) {
        throw ComputationError("one-face probability mismatch at n = " + std::to_string(n) + ": " +
                               from_counts.get_str());
    }
    return p;
}

BigInt odd_cycle_count(std::size_t a, std::size_t b) {
    if (b == 0 || b > a) return a == 0 && b == 0 ? BigInt(1) : BigInt(0);
    if ((a - b) % 2 != 0) return 0;
    // a! [x^a] H^b / b!, H = sum_{j odd} x^j / j
    const RationalSeries hb = pow(odd_harmonic_series(a), b);
    const Rational c = hb[a] * Rational(factorial(a)) / Rational(factorial(b));
    if (c.get_den() != 1) throw NonIntegerCount("O(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return c.get_num();
}

std::vector<BigInt> odd_cycle_counts(std::size_t a) {
    std::vector<BigInt> out(a + 1, BigInt(0));
    if (a == 0) {
        out[0] = 1;
        return out;
    }
    const RationalSeries h = odd_harmonic_series(a);
    RationalSeries hb = h;
    const Rational a_fact(factorial(a));
    BigInt b_fact = 1;
    for (std::size_t b = 1; b <= a; ++b) {
        if (b > 1) hb = hb * h;
        b_fact *= b;
        const Rational c = hb[a] * a_fact / Rational(b_fact);
        if (c.get_den() != 1) throw NonIntegerCount("O(" + std::to_string(a) + "," + std::to_string(b) + ")");
        out[b] = c.get_num();
    }
    return out;
}

FaceDistribution face_distribution(std::size_t n) {
    if (n == 0) throw InputError("n must be positive");
    const std::vector<BigInt> odd = odd_cycle_counts(n + 1);
    const Rational denom(factorial(n + 1));
    FaceDistribution fd;
    fd.n = n;
    fd.probs.assign(n + 2, Rational(0));
    BigInt two_pow = 1;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        fd.probs[k] = Rational(two_pow * odd[k]) / denom;
        two_pow *= 2;
    }
    return fd;
}

Rational factorial_moment(std::size_t n, std::size_t k) {
    if (n == 0 || k == 0) throw InputError("factorial_moment needs n >= 1 and k >= 1");
    const std::size_t order = n + 1;
    // (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
    RationalSeries ratio(order);
    ratio[0] = 1;
    for (std::size_t j = 1; j <= order; ++j) ratio[j] = 2;
    const RationalSeries lk = pow(log_ratio_series(order), k);
    // only the top coefficient of the product is needed
    Rational acc = 0;
    for (std::size_t j = 0; j <= order; ++j) {
        if (sgn(lk[j]) != 0) acc += lk[j] * ratio[order - j];
    }
    return acc / 2;
}

std::pair<Rational, Rational> exact_mean_variance(std::size_t n) {
    const Rational m1 = factorial_moment(n, 1);
    const Rational m2 = factorial_moment(n, 2);
    const Rational mean = (Rational(n + 1) - m1) / 2;
    const Rational var = (m2 + m1 - m1 * m1) / 4;
    return {mean, var};
}

HzIdentityReport verify_hz_identity(std::size_t x_order, std::size_t y_order) {
    if (x_order == 0 || y_order == 0) throw InputError("verify_hz_identity needs positive orders");
    HzIdentityReport report;
    report.x_order = x_order;
    report.y_order = y_order;

    // counts side, indexed [x power][y power]
    std::vector<std::vector<Rational>> lhs(x_order + 1, std::vector<Rational>(y_order + 1, Rational(0)));
    lhs[0][0] = 1;
    if (y_order >= 1) lhs[1][1] = 2;  // empty diagram
    for (std::size_t m = 2; m <= x_order; ++m) {
        const GenusDistribution d = genus_distribution(m - 1);
        for (std::size_t g = 0; g <= d.max_genus(); ++g) {
            const std::size_t j = m - 2 * g;
            if (j <= y_order) lhs[m][j] = 2 * d.probability(g);
        }
    }

    // closed-form side: [y^j] = L^j / j!
    const RationalSeries log_ratio = log_ratio_series(x_order);
    RationalSeries lj = RationalSeries::constant(1, x_order);
    BigInt j_fact = 1;
    for (std::size_t j = 0; j <= y_order; ++j) {
        if (j > 0) {
            lj = lj * log_ratio;
            j_fact *= j;
        }
        for (std::size_t m = 0; m <= x_order; ++m) {
            const Rational rhs = lj[m] / Rational(j_fact);
            ++report.terms_checked;
            if (rhs != lhs[m][j] && !report.first_mismatch) {
                report.first_mismatch = HzIdentityReport::Mismatch{m, j, lhs[m][j], rhs};
            }
        }
    }
    return report;
}

} // namespace genusdist
