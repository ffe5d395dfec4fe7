#ifndef SEIFERT_WRT_EICHLER_HPP
#define SEIFERT_WRT_EICHLER_HPP

#include "exactmath.hpp"
#include "modular.hpp"
#include "periodic.hpp"
#include "precision.hpp"
#include "seifert.hpp"

#include <array>
#include <stdexcept>

namespace swrt
{

/// tau = m / n in lowest terms, n > 0.
struct RationalPoint
{
    long m = 0;
    long n = 1;

    RationalPoint() = default;
    RationalPoint(long m_, long n_) : m(m_), n(n_)
    {
        if (n <= 0) {
            throw std::invalid_argument("rational point needs a positive denominator");
        }
        if (gcd_long(m, n) != 1) {
            throw std::invalid_argument("rational point " + std::to_string(m) + "/" + std::to_string(n) + " is not reduced");
        }
    }
    static RationalPoint integer(long m)
    {
        return RationalPoint(m, 1);
    }
};

/// C_p(l) = sum_{n=1}^{2P} chi(n) B_2(n / 2P).
inline Rational c_p(const SeifertData &s, const MultiIndex &l)
{
    if (s.fiber_count() != 4 || !is_interior(s, l)) {
        throw std::invalid_argument("c_p needs an interior four-fiber index");
    }
    const auto f = chi(s, l);
    const std::int64_t twoP = 2 * s.P();
    Rational acc(0);
    for (const auto &[r, v] : f.support()) {
        const std::int64_t n = r == 0 ? twoP : r;
        acc += v * bernoulli_poly(2, make_rational(static_cast<long>(n), static_cast<long>(twoP)));
    }
    acc.canonicalize();
    return acc;
}

/// C_p(l) by the piecewise-linear classification of the sixteen values 1 + sum eps_j l_j / p_j.
inline Rational c_p_classified(const SeifertData &s, const MultiIndex &l)
{
    if (s.fiber_count() != 4 || !is_interior(s, l)) {
        throw std::invalid_argument("c_p_classified needs an interior four-fiber index");
    }
    std::array<Rational, 4> x;
    for (std::size_t j = 0; j < 4; ++j) {
        x[j] = make_rational(l[j], s.p(j));
    }
    const Rational S = x[0] + x[1] + x[2] + x[3];
    if (S < 1 || S > 3) {
        return Rational(0);
    }
    // Two plus, two minus: a negative value means sigma_cd moves l below the hyperplane sum = 1.
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            const Rational v = 1 + x[a] + x[b] - (S - x[a] - x[b]);
            if (v < 0 || v > 2) {
                return Rational(0);
            }
        }
    }
    // One minus at d: 1 + S - 2 x_d. Count how many exceed 2.
    std::array<bool, 4> above{};
    int count = 0;
    for (std::size_t d = 0; d < 4; ++d) {
        above[d] = (1 + S - 2 * x[d]) > 2;
        count += above[d];
    }
    Rational c;
    switch (count) {
    case 0:
        c = 2 * (S - 1);
        break;
    case 1: {
        std::size_t a = 0;
        while (!above[a]) {
            ++a;
        }
        c = 4 * x[a];
        break;
    }
    case 2: {
        // 1 + x_a + x_b - x_c - x_d with a, b the two entries whose one-minus value exceeds 2
        Rational v(1);
        for (std::size_t j = 0; j < 4; ++j) {
            v += above[j] ? x[j] : -x[j];
        }
        c = 2 * v;
        break;
    }
    case 3: {
        std::size_t d = 0;
        while (above[d]) {
            ++d;
        }
        c = 4 * (1 - x[d]);
        break;
    }
    default:
        // mirror image of case 0 under sigma_12 o sigma_34 (sum -> 4 - sum)
        c = 2 * (3 - S);
        break;
    }
    c.canonicalize();
    return c;
}

namespace detail
{

/// exp(pi i (M/N) k^2 / (2P)) with the exponent reduced exactly: M k^2 mod 4PN over 2PN.
inline Complex quadratic_phase(long M, std::int64_t k, std::int64_t P, long N, mpfr_prec_t prec)
{
    const Integer modulus = Integer(static_cast<long>(4 * P)) * N;
    Integer e = Integer(static_cast<long>(k)) * Integer(static_cast<long>(k)) * M;
    e %= modulus;
    if (e < 0) {
        e += modulus;
    }
    return expi_pi(make_rational(e, modulus / 2), prec);
}

} // namespace detail

/// Limiting value of the weight-1/2 Eichler integral at tau = M/N:
/// -P N sum_{k=1}^{2PN} chi(k) exp(pi i (M/N) k^2 / 2P) B_2(k / 2PN).
inline Complex eichler_phi_limit(const SeifertData &s, const MultiIndex &l, RationalPoint tau, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (!is_interior(s, l)) {
        throw std::invalid_argument("eichler_phi_limit needs an interior index");
    }
    const auto f = chi(s, l);
    const std::int64_t P = s.P();
    const std::int64_t period = 2 * P;
    const std::int64_t total = period * tau.n;
    const mpfr_prec_t wp = prec + 32;
    Complex acc(wp);
    for (long block = 0; block < tau.n; ++block) {
        for (const auto &[r, v] : f.support()) {
            const std::int64_t k = r == 0 ? period * (block + 1) : period * block + r;
            const Rational weight = bernoulli_poly(2, make_rational(static_cast<long>(k), static_cast<long>(total)));
            Complex term = detail::quadratic_phase(tau.m, k, P, tau.n, wp);
            term *= Real(weight * v, wp);
            acc += term;
        }
    }
    acc *= Real(-static_cast<long>(P) * tau.n, wp);
    Complex out(prec);
    mpfr_set(out.re().get(), acc.re().get(), MPFR_RNDN);
    mpfr_set(out.im().get(), acc.im().get(), MPFR_RNDN);
    return out;
}

/// Limiting value of the weight-3/2 Eichler integral at tau = M/N:
/// -sum_{k=0}^{2PN} psi(k) exp(pi i (M/N) k^2 / 2P) B_1(k / 2PN).
inline Complex eichler_psi_limit(std::int64_t P, std::int64_t a, RationalPoint tau, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    const auto f = psi(P, a);
    const std::int64_t period = 2 * P;
    const std::int64_t total = period * tau.n;
    const mpfr_prec_t wp = prec + 32;
    Complex acc(wp);
    for (long block = 0; block < tau.n; ++block) {
        for (const auto &[r, v] : f.support()) {
            const std::int64_t k = period * block + r;
            const Rational weight = bernoulli_poly(1, make_rational(static_cast<long>(k), static_cast<long>(total)));
            Complex term = detail::quadratic_phase(tau.m, k, P, tau.n, wp);
            term *= Real(weight * v, wp);
            acc += term;
        }
    }
    acc = -acc;
    Complex out(prec);
    mpfr_set(out.re().get(), acc.re().get(), MPFR_RNDN);
    mpfr_set(out.im().get(), acc.im().get(), MPFR_RNDN);
    return out;
}

/// Closed form at an integer point: Phi~(N) = -P C_p(l) T^N.
inline Complex eichler_phi_at_integer(const SeifertData &s, const MultiIndex &l, long N, mpfr_prec_t prec = default_precision)
{
    const Rational c = c_p(s, l);
    Complex v = t_phase(s, l).power(Integer(N), prec);
    v *= Real(-Rational(static_cast<long>(s.P())) * c, prec);
    return v;
}

/// Closed form at an integer point: Psi~(N) = (1 - a/P) exp(pi i a^2 N / 2P).
inline Complex eichler_psi_at_integer(std::int64_t P, std::int64_t a, long N, mpfr_prec_t prec = default_precision)
{
    if (a <= 0 || a >= P) {
        throw std::invalid_argument("eichler_psi_at_integer requires 0 < a < P");
    }
    Complex v = expi_pi(make_rational(Integer(static_cast<long>(a * a)) * N, Integer(static_cast<long>(2 * P))), prec);
    v *= Real(1 - make_rational(static_cast<long>(a), static_cast<long>(P)), prec);
    return v;
}

} // namespace swrt

#endif
