#ifndef SEIFERT_WRT_EXACTMATH_HPP
#define SEIFERT_WRT_EXACTMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace swrt
{

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

inline Integer floor(const Rational &r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational &r)
{
    return r - Rational(floor(r));
}

/// Renders as "num/den" (or "num" for integers), sign on the numerator.
inline std::string to_string(const Rational &r)
{
    return r.get_str();
}

inline Integer binomial(long n, long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Bernoulli number B_k with B_1 = -1/2. Cached; safe to call concurrently.
inline Rational bernoulli_number(long k)
{
    if (k < 0) {
        throw std::invalid_argument("bernoulli_number: negative index");
    }
    static std::mutex lock;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> guard(lock);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (long m = static_cast<long>(cache.size()); m <= k; ++m) {
        Rational acc(0);
        for (long j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) {
                continue;
            }
            acc += Rational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
        }
        Rational b = -acc / Rational(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[static_cast<std::size_t>(k)];
}

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
inline Rational bernoulli_poly(long k, const Rational &x)
{
    if (k < 0) {
        throw std::invalid_argument("bernoulli_poly: negative degree");
    }
    // Horner in x over the coefficients C(k, j) B_j, highest power of x first.
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
        acc = acc * x + Rational(binomial(k, j)) * bernoulli_number(j);
    }
    acc.canonicalize();
    return acc;
}

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational &x)
{
    if (is_integer(x)) {
        return Rational(0);
    }
    return frac(x) - Rational(1, 2);
}

/// Dedekind sum s(b, a) through the reciprocity law, O(log a) steps.
inline Rational dedekind_sum(const Integer &b_in, const Integer &a_in)
{
    if (a_in < 1) {
        throw std::invalid_argument("dedekind_sum: a must be positive");
    }
    if (gcd(b_in, a_in) != 1) {
        throw std::invalid_argument("dedekind_sum: gcd(" + b_in.get_str() + ", " + a_in.get_str() + ") != 1");
    }
    Integer a = a_in;
    Integer b = b_in % a;
    if (b < 0) {
        b += a;
    }
    Rational acc(0);
    int sign = 1;
    // s(b,a) = -1/4 + (a/b + b/a + 1/(ab))/12 - s(a mod b, b), with s(0, 1) = 0.
    while (b != 0) {
        Rational rec = Rational(-1, 4) + (make_rational(a, b) + make_rational(b, a) + make_rational(Integer(1), a * b)) / 12;
        rec.canonicalize();
        acc += sign * rec;
        sign = -sign;
        Integer next = a % b;
        a = b;
        b = next;
    }
    acc.canonicalize();
    return acc;
}

inline Rational dedekind_sum(long b, long a)
{
    return dedekind_sum(Integer(b), Integer(a));
}

/// Signed Stirling number of the first kind: coefficient of x^m in x(x-1)...(x-n+1).
inline Integer stirling_first(long n, long m)
{
    if (n < 0 || m < 0) {
        throw std::invalid_argument("stirling_first: negative argument");
    }
    if (m > n) {
        return Integer(0);
    }
    // Coefficients of prod_{j<i} (x - j), grown one factor at a time.
    std::vector<Integer> c{Integer(1)};
    for (long i = 0; i < n; ++i) {
        std::vector<Integer> next(c.size() + 1, Integer(0));
        for (std::size_t d = 0; d < c.size(); ++d) {
            next[d + 1] += c[d];
            next[d] -= c[d] * i;
        }
        c = std::move(next);
    }
    return c[static_cast<std::size_t>(m)];
}

/// r (r-1) ... (r-n+1) / n! for rational r.
inline Rational gen_binomial(const Rational &r, long n)
{
    if (n < 0) {
        throw std::invalid_argument("gen_binomial: negative lower index");
    }
    Rational acc(1);
    for (long j = 0; j < n; ++j) {
        acc *= (r - j);
        acc /= (j + 1);
    }
    acc.canonicalize();
    return acc;
}

/// zeta(1 - k, z) = -B_k(z) / k for k >= 1, 0 < z <= 1.
inline Rational hurwitz_zeta_neg(long k, const Rational &z)
{
    if (k < 1) {
        throw std::invalid_argument("hurwitz_zeta_neg: k must be >= 1");
    }
    if (z <= 0 || z > 1) {
        throw std::invalid_argument("hurwitz_zeta_neg: z must lie in (0, 1]");
    }
    Rational r = -bernoulli_poly(k, z) / k;
    r.canonicalize();
    return r;
}

inline long gcd_long(long a, long b)
{
    return std::gcd(a, b);
}

/// Inverse of a modulo m (m >= 1), in [0, m).
inline long mod_inverse(long a, long m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), Integer(a).get_mpz_t(), Integer(m).get_mpz_t()) == 0) {
        if (m == 1) {
            return 0;
        }
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    }
    return r.get_si();
}

/// Non-negative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace swrt

#endif
