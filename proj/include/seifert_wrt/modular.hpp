#ifndef SEIFERT_WRT_MODULAR_HPP
#define SEIFERT_WRT_MODULAR_HPP

#include "exactmath.hpp"
#include "periodic.hpp"
#include "precision.hpp"
#include "seifert.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace swrt
{

/// A phase exp(pi i e) with exact exponent e in [0, 2).
struct TPhase
{
    Rational exponent;

    Complex value(mpfr_prec_t prec) const
    {
        return expi_pi(exponent, prec);
    }
    /// exp(pi i n e)
    Complex power(const Integer &n, mpfr_prec_t prec) const
    {
        return expi_pi(mod2(exponent * Rational(n)), prec);
    }
};

/// Exponent of (-1) in the S-matrix entry; always an integer for interior indices of a valid tuple.
inline Integer s_matrix_sign_exponent(const SeifertData &s, const MultiIndex &l, const MultiIndex &l2)
{
    const std::size_t M = s.fiber_count();
    const Rational P(static_cast<long>(s.P()));
    Rational e = P;
    for (std::size_t j = 0; j < M; ++j) {
        e += P * make_rational(l[j] + l2[j], s.p(j));
    }
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t k = 0; k < M; ++k) {
            if (j != k) {
                e += P * make_rational(l[j] * l2[k], s.p(j) * s.p(k));
            }
        }
    }
    e.canonicalize();
    if (!is_integer(e)) {
        throw std::logic_error("S-matrix sign exponent " + to_string(e) + " is not an integer for " + l.to_string()
                               + ", " + l2.to_string());
    }
    return e.get_num();
}

/// S_l^{l2} = (16 / sqrt(2P)) (-1)^{...} prod_j sin(P l_j l2_j pi / p_j^2). Real-valued.
inline Real s_matrix_entry(const SeifertData &s, const MultiIndex &l, const MultiIndex &l2, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (s.fiber_count() != 4 || !is_interior(s, l) || !is_interior(s, l2)) {
        throw std::invalid_argument("S-matrix entries need interior four-fiber indices");
    }
    const Integer sign_exp = s_matrix_sign_exponent(s, l, l2);
    const mpfr_prec_t wp = prec + 16;
    Real acc(16, wp);
    acc /= sqrt(Real(2 * static_cast<long>(s.P()), wp));
    for (std::size_t j = 0; j < 4; ++j) {
        const long pj = s.p(j);
        acc *= sin_pi(make_rational(Integer(static_cast<long>(s.P())) * l[j] * l2[j], Integer(pj * pj)), wp);
    }
    if (mpz_odd_p(sign_exp.get_mpz_t())) {
        acc = -acc;
    }
    Real out(prec);
    mpfr_set(out.get(), acc.get(), MPFR_RNDN);
    return out;
}

/// T-phase exponent (P/2)(1 + sum l_j/p_j)^2 reduced mod 2.
inline TPhase t_phase(const SeifertData &s, const MultiIndex &l)
{
    if (!is_interior(s, l)) {
        throw std::invalid_argument("T-phase needs an interior index, got " + l.to_string());
    }
    const Rational w = 1 + index_weight(s, l);
    return TPhase{mod2(make_rational(static_cast<long>(s.P()), 2) * w * w)};
}

/// M_b^a = sqrt(2/P) sin(a b pi / P).
inline Real m_matrix_entry(std::int64_t P, std::int64_t a, std::int64_t b, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (a <= 0 || a >= P || b <= 0 || b >= P) {
        throw std::invalid_argument("M-matrix indices must lie in (0, P)");
    }
    const mpfr_prec_t wp = prec + 16;
    Real v = sqrt(Real(make_rational(2, static_cast<long>(P)), wp));
    v *= sin_pi(make_rational(static_cast<long>(a * b), static_cast<long>(P)), wp);
    Real out(prec);
    mpfr_set(out.get(), v.get(), MPFR_RNDN);
    return out;
}

namespace detail
{

/// Smallest n with exp(-pi Im(tau) n^2 / (2P)) < 2^{-(prec+8)}.
inline std::int64_t qseries_cutoff(std::int64_t P, const Complex &tau, mpfr_prec_t prec)
{
    const double im = tau.im().to_double();
    const double bound = std::sqrt(static_cast<double>(prec + 8) * std::log(2.0) * 2.0 * static_cast<double>(P) / (M_PI * im));
    return static_cast<std::int64_t>(std::ceil(bound)) + 1;
}

inline void require_upper_half_plane(const Complex &tau)
{
    if (mpfr_sgn(tau.im().get()) <= 0) {
        throw std::domain_error("tau must lie in the upper half plane");
    }
}

/// sum_{|n| <= cutoff} weight(n) f(n) q^{n^2/4P}; q^{n^2/4P} = exp(pi i tau n^2 / (2P)).
template <typename Weight>
Complex theta_sum(const SignedPeriodicFunction &f, std::int64_t P, const Complex &tau, std::int64_t cutoff, mpfr_prec_t prec,
                  Weight &&weight)
{
    const mpfr_prec_t wp = prec + 32;
    Complex tau_w{Real(wp), Real(wp)};
    mpfr_set(tau_w.re().get(), tau.re().get(), MPFR_RNDN);
    mpfr_set(tau_w.im().get(), tau.im().get(), MPFR_RNDN);
    // i pi tau / (2P)
    const Real scale = pi(wp) / Real(2 * static_cast<long>(P), wp);
    const Complex itau_scaled(-(tau_w.im() * scale), tau_w.re() * scale);
    Complex acc(wp);
    for (std::int64_t n = -cutoff; n <= cutoff; ++n) {
        const int v = f(n);
        if (v == 0) {
            continue;
        }
        const Real n2(static_cast<long>(n * n), wp);
        Complex term = exp(itau_scaled * n2);
        term *= Real(static_cast<long>(weight(n) * v), wp);
        acc += term;
    }
    return acc;
}

} // namespace detail

/// Phi(tau) = (1/2) sum_n chi(n) q^{n^2/4P}, truncated where the Gaussian tail drops below 2^{-(prec+8)}.
/// A cutoff of 0 selects that bound automatically.
inline Complex phi_qseries(const SeifertData &s, const MultiIndex &l, const Complex &tau, mpfr_prec_t prec = default_precision,
                           std::int64_t cutoff = 0)
{
    check_precision(prec);
    detail::require_upper_half_plane(tau);
    const auto f = chi(s, l);
    if (cutoff <= 0) {
        cutoff = detail::qseries_cutoff(s.P(), tau, prec);
    }
    Complex acc = detail::theta_sum(f, s.P(), tau, cutoff, prec, [](std::int64_t) { return 1L; });
    mpfr_div_2ui(acc.re().get(), acc.re().get(), 1, MPFR_RNDN);
    mpfr_div_2ui(acc.im().get(), acc.im().get(), 1, MPFR_RNDN);
    return acc;
}

/// Psi(tau) = (1/2) sum_n n psi(n) q^{n^2/4P}.
inline Complex psi_qseries(std::int64_t P, std::int64_t a, const Complex &tau, mpfr_prec_t prec = default_precision,
                           std::int64_t cutoff = 0)
{
    check_precision(prec);
    detail::require_upper_half_plane(tau);
    const auto f = psi(P, a);
    if (cutoff <= 0) {
        // the extra factor n grows the tail only polynomially; a few more terms cover it
        cutoff = detail::qseries_cutoff(P, tau, prec) + 4;
    }
    Complex acc = detail::theta_sum(f, P, tau, cutoff, prec, [](std::int64_t n) { return static_cast<long>(n); });
    mpfr_div_2ui(acc.re().get(), acc.re().get(), 1, MPFR_RNDN);
    mpfr_div_2ui(acc.im().get(), acc.im().get(), 1, MPFR_RNDN);
    return acc;
}

/// Full S matrix over the canonical representatives, row-major in canonical order.
inline std::vector<std::vector<Real>> s_matrix(const SeifertData &s, mpfr_prec_t prec = default_precision)
{
    const auto reps = canonical_multiindices(s);
    std::vector<std::vector<Real>> S(reps.size(), std::vector<Real>(reps.size(), Real(prec)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
            S[i][j] = s_matrix_entry(s, reps[i], reps[j], prec);
            S[j][i] = S[i][j];
        }
    }
    return S;
}

} // namespace swrt

#endif
