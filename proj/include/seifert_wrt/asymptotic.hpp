#ifndef SEIFERT_WRT_ASYMPTOTIC_HPP
#define SEIFERT_WRT_ASYMPTOTIC_HPP

#include "eichler.hpp"
#include "exactmath.hpp"
#include "modular.hpp"
#include "periodic.hpp"
#include "precision.hpp"
#include "seifert.hpp"
#include "wrt.hpp"

#include <stdexcept>
#include <vector>

namespace swrt
{

enum class Branch { less_than_one, greater_than_one };

inline Branch branch_of(const SeifertData &s)
{
    if (s.inverse_sum() == 1) {
        throw std::logic_error("sum of 1/p_j equals 1, which no pairwise coprime 4-tuple attains");
    }
    return s.inverse_sum() > 1 ? Branch::greater_than_one : Branch::less_than_one;
}

inline const char *to_string(Branch b)
{
    return b == Branch::greater_than_one ? "greater-than-one" : "less-than-one";
}

namespace detail
{

inline void require_four(const SeifertData &s, const char *what)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument(std::string(what) + " needs four fibers");
    }
}

inline MultiIndex base_index(const SeifertData &s)
{
    return MultiIndex{{s.p(0) - 1, 1, 1, 1}};
}

/// 2P - P sum 1/p_j, the psi label of the extra branch term.
inline std::int64_t branch_label(const SeifertData &s)
{
    const Rational v = Rational(2 * static_cast<long>(s.P())) - Rational(static_cast<long>(s.P())) * s.inverse_sum();
    return v.get_num().get_si();
}

/// L(1 - k, f) = m^{k-1} sum_{a=1}^{m} f(a) zeta(1 - k, a/m) for f of period m.
inline Rational dirichlet_l_nonpositive(const SignedPeriodicFunction &f, long k)
{
    const long m = static_cast<long>(f.modulus());
    Rational acc(0);
    for (const auto &[r, v] : f.support()) {
        const long a = r == 0 ? m : static_cast<long>(r);
        acc += v * hurwitz_zeta_neg(k, make_rational(a, m));
    }
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), Integer(m).get_mpz_t(), static_cast<unsigned long>(k - 1));
    acc *= scale;
    acc.canonicalize();
    return acc;
}

} // namespace detail

/// T(k) in Bernoulli-polynomial form.
inline Rational t_series(const SeifertData &s, long k)
{
    detail::require_four(s, "t_series");
    if (k < 0) {
        throw std::invalid_argument("t_series needs k >= 0");
    }
    const std::int64_t P = s.P();
    const long twoP = 2 * static_cast<long>(P);
    const auto f = chi(s, detail::base_index(s));
    Rational acc(0);
    for (long n = -static_cast<long>(P); n <= static_cast<long>(P); ++n) {
        const int v = f(n);
        if (v == 0) {
            continue;
        }
        const Rational x = make_rational(n, twoP);
        acc += v * (-bernoulli_poly(2 * k + 2, x) / (4 * (k + 1))
                    + Rational(n) * bernoulli_poly(2 * k + 1, x) / (2 * twoP * (2 * k + 1)));
    }
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), Integer(twoP).get_mpz_t(), static_cast<unsigned long>(2 * k));
    if (s.inverse_sum() > 1) {
        acc += bernoulli_poly(2 * k + 1, s.inverse_sum() / 2) / (2 * k + 1);
    }
    acc *= scale;
    acc.canonicalize();
    return acc;
}

/// T(k) from special values of the Dirichlet series of chi and psi.
inline Rational t_series_via_L(const SeifertData &s, long k)
{
    detail::require_four(s, "t_series_via_L");
    if (k < 0) {
        throw std::invalid_argument("t_series_via_L needs k >= 0");
    }
    const std::int64_t P = s.P();
    const auto f = chi(s, detail::base_index(s));
    Rational acc = detail::dirichlet_l_nonpositive(f, 2 * k + 2);
    for (std::int64_t a = 1; a < P; ++a) {
        const int v = f(a);
        if (v != 0) {
            acc -= Rational(static_cast<long>(a) * v) * detail::dirichlet_l_nonpositive(psi(P, a), 2 * k + 1);
        }
    }
    acc /= 4 * static_cast<long>(P);
    if (s.inverse_sum() > 1) {
        acc += detail::dirichlet_l_nonpositive(psi(P, detail::branch_label(s)), 2 * k + 1) / 2;
    }
    acc.canonicalize();
    return acc;
}

/// T(0..k_max) as 2 (2k)! [x^{2k}] prod_j sinh(P x / p_j) / sinh(P x)^2.
inline std::vector<Rational> t_series_via_sinh(const SeifertData &s, long k_max)
{
    detail::require_four(s, "t_series_via_sinh");
    if (k_max < 0) {
        throw std::invalid_argument("t_series_via_sinh needs k_max >= 0");
    }
    // Series in u = x^2, truncated after u^{k_max}.
    const std::size_t len = static_cast<std::size_t>(k_max) + 1;
    using Series = std::vector<Rational>;
    const auto mul = [&](const Series &a, const Series &b) {
        Series c(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = 0; i + j < len; ++j) {
                c[i + j] += a[i] * b[j];
            }
        }
        return c;
    };
    // sinh(c x) / (c x) = sum c^{2n} u^n / (2n+1)!
    const auto sinhc = [&](const Rational &c) {
        Series out(len);
        Rational pw(1);
        for (std::size_t n = 0; n < len; ++n) {
            out[n] = pw / Rational(factorial(static_cast<long>(2 * n + 1)));
            pw *= c * c;
        }
        return out;
    };
    const Rational P(static_cast<long>(s.P()));
    Series num(len, Rational(0));
    num[0] = 1;
    for (long pj : s.p()) {
        num = mul(num, sinhc(P / pj));
    }
    const Series den = [&] {
        const Series h = sinhc(P);
        return mul(h, h);
    }();
    // inverse of den (den[0] = 1)
    Series inv(len, Rational(0));
    inv[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc(0);
        for (std::size_t j = 1; j <= n; ++j) {
            acc += den[j] * inv[n - j];
        }
        inv[n] = -acc;
    }
    // prod sinh(P x/p_j) / sinh(P x)^2 = (P^4 / prod p_j) x^4 / (P x)^2 * num / den = P x^2 num / den
    const Series g = mul(num, inv);
    std::vector<Rational> T(len, Rational(0));
    for (std::size_t k = 1; k < len; ++k) {
        T[k] = 2 * Rational(factorial(static_cast<long>(2 * k))) * P * g[k - 1];
        T[k].canonicalize();
    }
    return T;
}

/// One dominating exponential term amp * exp(pi i e N).
struct Z0Term
{
    MultiIndex l;
    Complex amplitude;
    /// -(P/2)(1 + sum l/p)^2 mod 2
    Rational cs_exponent;
    bool zero_amplitude = false;
};

struct Z1Term
{
    long b = 0;
    Complex amplitude;
    /// -b^2 / 2P
    Rational exponent;
};

struct AsymptoticExpansion
{
    std::vector<Z0Term> z0_contributions;
    std::vector<Z1Term> z1_contributions;
    /// T(0..K)
    std::vector<Rational> tail;
    Branch branch = Branch::less_than_one;
};

/// The D leading terms, with the common factor exp(-phi pi i / 2N) left out.
inline std::vector<Z0Term> z0_terms(const SeifertData &s, mpfr_prec_t prec = default_precision)
{
    detail::require_four(s, "z0");
    check_precision(prec);
    const std::int64_t P = s.P();
    const mpfr_prec_t wp = prec + 32;
    const Complex front = expi_pi(Rational(3, 4), wp);
    const Real scale = Real(2, wp) / sqrt(Real(static_cast<long>(P), wp));
    std::vector<Z0Term> out;
    for (const auto &l : canonical_multiindices(s)) {
        Z0Term t;
        t.l = l;
        const Rational c = c_p(s, l);
        t.zero_amplitude = c == 0;
        // 1 + sum_k P/p_k + P sum_{j != k} l_k / (p_j p_k)
        Integer e(1);
        for (std::size_t k = 0; k < 4; ++k) {
            e += P / s.p(k);
            for (std::size_t j = 0; j < 4; ++j) {
                if (j != k) {
                    e += static_cast<long>(P / (s.p(j) * s.p(k)) * l[k]);
                }
            }
        }
        Real amp = scale * Real(c, wp);
        for (std::size_t k = 0; k < 4; ++k) {
            const long pk = s.p(k);
            amp *= sin_pi(make_rational(Integer(static_cast<long>(P)) * l[k], Integer(pk * pk)), wp);
        }
        if (mpz_odd_p(e.get_mpz_t())) {
            amp = -amp;
        }
        t.amplitude = front * amp;
        const Rational w = 1 + index_weight(s, l);
        t.cs_exponent = mod2(-make_rational(static_cast<long>(P), 2) * w * w);
        out.push_back(std::move(t));
    }
    return out;
}

namespace detail
{

/// sum_{a=1}^{P-1} a chi(a) sin(a b pi / P) for the base index (p_1 - 1, 1, 1, 1).
inline Real weighted_sine(const SignedPeriodicFunction &f, std::int64_t P, std::int64_t b, mpfr_prec_t prec)
{
    Real acc(prec);
    for (const auto &[r, v] : f.support()) {
        if (r > 0 && r < P) {
            acc += Real(static_cast<long>(r) * v, prec)
                   * sin_pi(make_rational(static_cast<long>(r * b), static_cast<long>(P)), prec);
        }
    }
    return acc;
}

} // namespace detail

/// The P-1 next-to-leading terms, with the common factor exp(-phi pi i / 2N) left out.
/// Amplitudes come from the Psi~(-N) terms of the expansion:
/// exp(-3 pi i/4) (P-b)/(2 sqrt(P^3)) (sum_a a chi(a) sin(ab pi/P) / 2P [+ sin(b pi sum 1/p_j)]).
inline std::vector<Z1Term> z1_terms(const SeifertData &s, mpfr_prec_t prec = default_precision)
{
    detail::require_four(s, "z1");
    check_precision(prec);
    const std::int64_t P = s.P();
    const mpfr_prec_t wp = prec + 32;
    const bool above = branch_of(s) == Branch::greater_than_one;
    const auto f = chi(s, detail::base_index(s));
    const Complex front = expi_pi(Rational(-3, 4), wp);
    const Real sqrtP3 = sqrt(Real(static_cast<long>(P), wp)) * Real(static_cast<long>(P), wp);
    std::vector<Z1Term> out;
    for (std::int64_t b = 1; b < P; ++b) {
        Real amp = detail::weighted_sine(f, P, b, wp) / Real(2 * static_cast<long>(P), wp);
        if (above) {
            amp += sin_pi(Rational(static_cast<long>(b)) * s.inverse_sum(), wp);
        }
        amp *= Real(static_cast<long>(P - b), wp) / (Real(2, wp) * sqrtP3);
        Z1Term t;
        t.b = static_cast<long>(b);
        t.amplitude = front * amp;
        t.exponent = -make_rational(static_cast<long>(b * b), 2 * static_cast<long>(P));
        out.push_back(std::move(t));
    }
    return out;
}

namespace detail
{

inline Complex phi_phase(const SeifertData &s, long N, mpfr_prec_t prec)
{
    return expi_pi(-s.phi() / (2 * N), prec);
}

inline Complex round_to(const Complex &z, mpfr_prec_t prec)
{
    Complex out(prec);
    mpfr_set(out.re().get(), z.re().get(), MPFR_RNDN);
    mpfr_set(out.im().get(), z.im().get(), MPFR_RNDN);
    return out;
}

} // namespace detail

/// Z0 at root order N, and its contribution list.
inline Complex z0(const SeifertData &s, long N, mpfr_prec_t prec = default_precision, std::vector<Z0Term> *terms = nullptr)
{
    if (N < 3) {
        throw std::invalid_argument("root order must be at least 3, got " + std::to_string(N));
    }
    const mpfr_prec_t wp = prec + 32;
    auto list = z0_terms(s, prec);
    Complex acc(wp);
    for (const auto &t : list) {
        if (!t.zero_amplitude) {
            acc += t.amplitude * expi_pi(mod2(t.cs_exponent * N), wp);
        }
    }
    acc = detail::phi_phase(s, N, wp) * acc;
    if (terms) {
        *terms = std::move(list);
    }
    return detail::round_to(acc, prec);
}

/// Z1 at root order N.
inline Complex z1(const SeifertData &s, long N, mpfr_prec_t prec = default_precision, std::vector<Z1Term> *terms = nullptr)
{
    if (N < 3) {
        throw std::invalid_argument("root order must be at least 3, got " + std::to_string(N));
    }
    const mpfr_prec_t wp = prec + 32;
    auto list = z1_terms(s, prec);
    Complex acc(wp);
    for (const auto &t : list) {
        acc += t.amplitude * expi_pi(mod2(t.exponent * N), wp);
    }
    acc = detail::phi_phase(s, N, wp) * acc;
    if (terms) {
        *terms = std::move(list);
    }
    return detail::round_to(acc, prec);
}

/// Number of Z1 terms whose amplitude exceeds 2^{-prec/2} in modulus.
inline std::size_t z1_nonzero_count(const SeifertData &s, mpfr_prec_t prec = default_precision)
{
    const Real eps = pow2(-static_cast<long>(prec) / 2, prec);
    std::size_t n = 0;
    for (const auto &t : z1_terms(s, prec)) {
        n += t.amplitude.abs() > eps;
    }
    return n;
}

inline AsymptoticExpansion expansion(const SeifertData &s, long K, mpfr_prec_t prec = default_precision)
{
    if (K < 0) {
        throw std::invalid_argument("tail order must be >= 0");
    }
    AsymptoticExpansion out;
    out.branch = branch_of(s);
    out.z0_contributions = z0_terms(s, prec);
    out.z1_contributions = z1_terms(s, prec);
    for (long k = 0; k <= K; ++k) {
        out.tail.push_back(t_series(s, k));
    }
    return out;
}

struct AsymptoticValue
{
    /// asymptotic value of prefactor * tau_N
    Complex lhs;
    Complex tau_n;
    /// Witten normalization Z_{N-2}
    Complex z_level;
    /// modulus of the last retained tail term T(K)/K! (pi i / 2PN)^K
    Real last_tail_term;
};

/// Leading Eichler/S-matrix sum, the Psi~(-N) terms and the T-series tail up to order K, at root order N.
inline AsymptoticValue full_asymptotic(const SeifertData &s, long N, long K, mpfr_prec_t prec = default_precision)
{
    detail::require_four(s, "full_asymptotic");
    check_precision(prec);
    if (N < 3) {
        throw std::invalid_argument("root order must be at least 3, got " + std::to_string(N));
    }
    if (K < 0) {
        throw std::invalid_argument("tail order must be >= 0");
    }
    const std::int64_t P = s.P();
    const mpfr_prec_t wp = prec + 32;
    const MultiIndex base = detail::base_index(s);
    const Complex minus_i(Real(wp), Real(-1, wp));
    const Complex n_over_i = minus_i * Real(N, wp);
    const Complex root = sqrt(n_over_i);

    // -(1/4P) (N/i)^{3/2} sum_l S_{base}^l Phi~^l(-N)
    Complex lead(wp);
    for (const auto &l : canonical_multiindices(s)) {
        const Real sv = s_matrix_entry(s, base, l, wp);
        lead += eichler_phi_at_integer(s, l, -N, wp) * sv;
    }
    lead = n_over_i * root * lead;
    lead = lead / Real(-4 * static_cast<long>(P), wp);

    // sqrt(N/i) sum_b (sum_a a chi(a) sin(ab pi/P)) (P-b)/sqrt(8 P^5) exp(-b^2 pi i N / 2P)
    const auto f = chi(s, base);
    const Real sqrt8P5 = sqrt(Real(8, wp) * Real(static_cast<long>(P), wp) * Real(static_cast<long>(P), wp)
                              * Real(static_cast<long>(P), wp) * Real(static_cast<long>(P), wp)
                              * Real(static_cast<long>(P), wp));
    const Real sqrt2P3 = sqrt(Real(2, wp) * Real(static_cast<long>(P), wp) * Real(static_cast<long>(P), wp)
                              * Real(static_cast<long>(P), wp));
    const bool above = branch_of(s) == Branch::greater_than_one;
    Complex second(wp);
    for (std::int64_t b = 1; b < P; ++b) {
        const Real inner = detail::weighted_sine(f, P, b, wp);
        Real amp = inner * Real(static_cast<long>(P - b), wp) / sqrt8P5;
        if (above) {
            amp += sin_pi(Rational(static_cast<long>(b)) * s.inverse_sum(), wp) * Real(static_cast<long>(P - b), wp)
                   / sqrt2P3;
        }
        second += expi_pi(mod2(-make_rational(static_cast<long>(b * b) * N, 2 * static_cast<long>(P))), wp) * amp;
    }
    second = root * second;

    // sum_{k <= K} T(k)/k! (pi i / 2PN)^k
    const Complex step = Complex(Real(wp), pi(wp)) / Real(2 * static_cast<long>(P) * N, wp);
    Complex tail(wp);
    Complex power(Real(1, wp), Real(wp));
    Complex last(wp);
    for (long k = 0; k <= K; ++k) {
        last = power * Real(t_series(s, k) / Rational(factorial(k)), wp);
        tail += last;
        power = power * step;
    }

    Complex lhs = lead + second + tail;
    AsymptoticValue out;
    out.tau_n = detail::round_to(lhs / lhs_prefactor(s, N, wp), prec);
    out.z_level = detail::round_to(lhs_to_z(s, N, lhs), prec);
    out.lhs = detail::round_to(lhs, prec);
    out.last_tail_term = Real(prec);
    mpfr_set(out.last_tail_term.get(), last.abs().get(), MPFR_RNDN);
    return out;
}

/// The two table columns at level n (root order n + 2): (n+2) Z0 + Z1 and (n+2) Z0.
inline std::pair<Complex, Complex> table_asymptotics(const SeifertData &s, long level, mpfr_prec_t prec = default_precision)
{
    const long N = level + 2;
    Complex lead = z0(s, N, prec + 16) * Real(N, prec + 16);
    Complex both = lead + z1(s, N, prec + 16);
    return {detail::round_to(both, prec), detail::round_to(lead, prec)};
}

} // namespace swrt

#endif
