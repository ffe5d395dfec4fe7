#ifndef SEIFERT_WRT_WRT_HPP
#define SEIFERT_WRT_WRT_HPP

#include "eichler.hpp"
#include "exactmath.hpp"
#include "periodic.hpp"
#include "precision.hpp"
#include "seifert.hpp"

#include <array>
#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swrt
{

/// Entries beyond this fall back to evaluating sines on the fly.
inline constexpr std::uint64_t max_sine_table_entries = std::uint64_t(1) << 24;

/// sin(pi k / (2 Q)) for integer k, from a quarter-wave table of Q + 1 values
/// (or on the fly when Q is too large to tabulate).
class SineTable
{
public:
    SineTable(std::uint64_t quarter, mpfr_prec_t prec, std::size_t chunks = 1)
        : quarter_(quarter), prec_(prec), tabulated_(quarter + 1 <= max_sine_table_entries)
    {
        if (!tabulated_) {
            return;
        }
        table_.assign(quarter + 1, Real(prec));
        // sin and cos of the first octant fill both ends of the quarter.
        const std::uint64_t half = quarter / 2;
        chunked_sum(half + 1, chunks, prec, [&](std::uint64_t lo, std::uint64_t hi) {
            Real arg(prec + 16);
            const Real unit = pi(prec + 16) / Real(static_cast<long>(2 * quarter), prec + 16);
            for (std::uint64_t j = lo; j < hi; ++j) {
                mpfr_mul_ui(arg.get(), unit.get(), j, MPFR_RNDN);
                if (2 * j == quarter) {
                    mpfr_sin(table_[j].get(), arg.get(), MPFR_RNDN);
                } else {
                    mpfr_sin_cos(table_[j].get(), table_[quarter - j].get(), arg.get(), MPFR_RNDN);
                }
            }
            return Complex(prec);
        });
    }

    std::uint64_t quarter() const
    {
        return quarter_;
    }
    bool tabulated() const
    {
        return tabulated_;
    }

    /// out = sin(pi k / (2Q))
    void sin_into(std::int64_t k, mpfr_ptr out) const
    {
        const std::int64_t Q = static_cast<std::int64_t>(quarter_);
        std::int64_t r = mod_floor(k, 4 * Q);
        bool negate = false;
        if (r >= 2 * Q) {
            r -= 2 * Q;
            negate = true;
        }
        if (r > Q) {
            r = 2 * Q - r;
        }
        if (tabulated_) {
            mpfr_set(out, table_[static_cast<std::size_t>(r)].get(), MPFR_RNDN);
        } else {
            mpfr_t arg;
            mpfr_init2(arg, prec_ + 16);
            mpfr_const_pi(arg, MPFR_RNDN);
            mpfr_mul_si(arg, arg, static_cast<long>(r), MPFR_RNDN);
            mpfr_div_si(arg, arg, static_cast<long>(2 * Q), MPFR_RNDN);
            mpfr_sin(out, arg, MPFR_RNDN);
            mpfr_clear(arg);
        }
        if (negate) {
            mpfr_neg(out, out, MPFR_RNDN);
        }
    }
    /// out = cos(pi k / (2Q))
    void cos_into(std::int64_t k, mpfr_ptr out) const
    {
        sin_into(k + static_cast<std::int64_t>(quarter_), out);
    }

private:
    std::uint64_t quarter_;
    mpfr_prec_t prec_;
    bool tabulated_;
    std::vector<Real> table_;
};

/// tau_N together with Witten's normalization Z_{N-2} = tau_N sin(pi/N) / sqrt(N/2).
struct WrtValue
{
    Complex tau_n;
    Complex z_level;
    long root_order = 0;
    /// conservative bound on the absolute rounding error of z_level
    Real error_bound;
    /// number of evaluated summands (2PN - 2P)
    std::uint64_t term_count = 0;
};

/// exp((2 pi i / N)(phi/4 - 1/2)) (exp(2 pi i / N) - 1), the factor multiplying tau_N.
inline Complex lhs_prefactor(const SeifertData &s, long N, mpfr_prec_t prec = default_precision)
{
    if (N < 3) {
        throw std::invalid_argument("root order must be at least 3, got " + std::to_string(N));
    }
    const Rational e = make_rational(2, N) * (s.phi() / 4 - Rational(1, 2));
    Complex w = expi_pi(make_rational(2, N), prec);
    w -= Complex(Real(1, prec), Real(prec));
    return expi_pi(e, prec) * w;
}

/// Multiplies a left-hand-side value (prefactor * tau_N) into Witten's normalization:
/// Z_{N-2} = exp(-pi i phi / 2N) / (i sqrt(2N)) * lhs.
inline Complex lhs_to_z(const SeifertData &s, long N, const Complex &lhs)
{
    const mpfr_prec_t prec = lhs.precision();
    Complex f = expi_pi(-s.phi() / (2 * N), prec);
    // 1/i = -i
    f = Complex(f.im(), -f.re());
    f = f / sqrt(Real(2 * N, prec));
    return f * lhs;
}

inline Complex tau_to_z(long N, const Complex &tau)
{
    const mpfr_prec_t prec = tau.precision();
    Real f = sin_pi(make_rational(1, N), prec);
    f /= sqrt(Real(make_rational(N, 2), prec));
    return tau * f;
}

/// Exact tau_N(Sigma(p_1..p_4)) from the finite sum over n = 0 .. 2PN-1 with N not dividing n.
inline WrtValue tau_exact(const SeifertData &s, long N, mpfr_prec_t prec = default_precision, std::size_t chunks = 1)
{
    check_precision(prec);
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("tau_exact needs four fibers");
    }
    if (N < 3) {
        throw std::invalid_argument("root order must be at least 3, got " + std::to_string(N));
    }
    const std::int64_t P = s.P();
    const std::int64_t Q = P * N;       // omega = exp(pi i / 2Q) has order 4Q
    const std::uint64_t count = static_cast<std::uint64_t>(2 * Q);
    const mpfr_prec_t wp = prec + 32;
    const SineTable table(static_cast<std::uint64_t>(Q), wp, chunks);
    std::array<std::int64_t, 4> step{};
    for (std::size_t j = 0; j < 4; ++j) {
        step[j] = 2 * P / s.p(j);
    }

    // term(n) = exp(-pi i n^2 / 2PN) prod_j 2i sin(n pi / N p_j) / (2i sin(n pi / N))^2
    //         = -4 omega^{-n^2} prod_j sin(n pi / N p_j) / sin(n pi / N)^2
    Complex sum = chunked_sum(count, chunks, wp, [&](std::uint64_t lo, std::uint64_t hi) {
        Complex acc(wp);
        Real num(wp), den(wp), tmp(wp), c(wp), sn(wp);
        for (std::uint64_t u = lo; u < hi; ++u) {
            const std::int64_t n = static_cast<std::int64_t>(u);
            if (n % N == 0) {
                continue;
            }
            table.sin_into(n * step[0], num.get());
            for (std::size_t j = 1; j < 4; ++j) {
                table.sin_into(n * step[j], tmp.get());
                mpfr_mul(num.get(), num.get(), tmp.get(), MPFR_RNDN);
            }
            table.sin_into(2 * P * n, den.get());
            mpfr_sqr(den.get(), den.get(), MPFR_RNDN);
            mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
            const std::int64_t sq = mod_floor(n % (4 * Q) * (n % (4 * Q)) % (4 * Q), 4 * Q);
            table.cos_into(sq, c.get());
            table.sin_into(-sq, sn.get());
            mpfr_mul(c.get(), c.get(), num.get(), MPFR_RNDN);
            mpfr_mul(sn.get(), sn.get(), num.get(), MPFR_RNDN);
            mpfr_add(acc.re().get(), acc.re().get(), c.get(), MPFR_RNDN);
            mpfr_add(acc.im().get(), acc.im().get(), sn.get(), MPFR_RNDN);
        }
        return acc;
    });
    sum *= Real(-4, wp);

    // e^{pi i/4} / (2 sqrt(2PN))
    Complex rhs = expi_pi(Rational(1, 4), wp) * sum;
    rhs = rhs / (Real(2, wp) * sqrt(Real(2 * Q, wp)));

    WrtValue out;
    out.root_order = N;
    out.term_count = count - static_cast<std::uint64_t>(2 * P);
    const Complex tau = rhs / lhs_prefactor(s, N, wp);
    const Complex z = lhs_to_z(s, N, rhs);
    out.tau_n = Complex(Real(prec), Real(prec));
    mpfr_set(out.tau_n.re().get(), tau.re().get(), MPFR_RNDN);
    mpfr_set(out.tau_n.im().get(), tau.im().get(), MPFR_RNDN);
    out.z_level = Complex(Real(prec), Real(prec));
    mpfr_set(out.z_level.re().get(), z.re().get(), MPFR_RNDN);
    mpfr_set(out.z_level.im().get(), z.im().get(), MPFR_RNDN);

    // Each summand has modulus <= 4 / sin^2(pi/N) <= N^2 and carries a few ulps of relative error.
    Real bound(static_cast<long>(out.term_count), prec);
    bound *= Real(N, prec) * Real(N, prec);
    bound *= pow2(-static_cast<long>(wp) + 6, prec);
    bound /= sqrt(Real(2 * Q, prec)) * sqrt(Real(2 * N, prec));
    bound += pow2(-static_cast<long>(prec) + 1, prec) * z.abs();
    out.error_bound = bound;
    return out;
}

/// Right-hand side of the Eichler-integral form of prefactor * tau_N:
/// (1/4P) Phi~^{(p1-1,1,1,1)}(1/N) - (1/4P) sum_a a chi(a) Psi~^{(a)}(1/N)
/// [+ (1/2) Psi~^{(2P - sum P/p_j)}(1/N) when sum 1/p_j > 1].
inline Complex wrt_via_eichler(const SeifertData &s, long N, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("wrt_via_eichler needs four fibers");
    }
    if (N < 1) {
        throw std::invalid_argument("root order must be positive");
    }
    const std::int64_t P = s.P();
    const mpfr_prec_t wp = prec + 32;
    const MultiIndex base{{s.p(0) - 1, 1, 1, 1}};
    const RationalPoint tau(1, N);
    const auto f = chi(s, base);

    Complex acc = eichler_phi_limit(s, base, tau, wp);
    for (std::int64_t a = 1; a < P; ++a) {
        const int v = f(a);
        if (v == 0) {
            continue;
        }
        Complex term = eichler_psi_limit(P, a, tau, wp);
        term *= Real(static_cast<long>(a) * v, wp);
        acc -= term;
    }
    acc = acc / Real(4 * static_cast<long>(P), wp);
    if (s.inverse_sum() > 1) {
        const Rational shift = Rational(static_cast<long>(2 * P)) - Rational(static_cast<long>(P)) * s.inverse_sum();
        Complex extra = eichler_psi_limit(P, shift.get_num().get_si(), tau, wp);
        extra = extra / Real(2, wp);
        acc += extra;
    }
    Complex out(prec);
    mpfr_set(out.re().get(), acc.re().get(), MPFR_RNDN);
    mpfr_set(out.im().get(), acc.im().get(), MPFR_RNDN);
    return out;
}

/// Both sides of sum_{n=1}^{N-1} w^{(k+1)n} / (1 - w^n)^2 = 1/12 - (N^2/2) B_2(k/N), w = exp(2 pi i/N).
inline std::pair<Complex, Complex> omega_identity_check(long N, long k, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (N < 1 || k < 0 || k > N - 1) {
        throw std::invalid_argument("omega identity needs N >= 1 and 0 <= k <= N-1");
    }
    const mpfr_prec_t wp = prec + 32;
    Complex lhs(wp);
    const Complex one(Real(1, wp), Real(wp));
    for (long n = 1; n < N; ++n) {
        const Complex num = expi_pi(make_rational(2 * (k + 1) * n, N), wp);
        const Complex d = one - expi_pi(make_rational(2 * n, N), wp);
        lhs += num / (d * d);
    }
    const Rational r = Rational(1, 12) - make_rational(N * N, 2) * bernoulli_poly(2, make_rational(k, N));
    return {lhs, Complex(Real(r, wp), Real(wp))};
}

/// Both sides of the quadratic Gauss sum reciprocity
/// sum_{n mod N} e^{pi i M n^2 / N + 2 pi i k n} = sqrt|N/M| e^{pi i sgn(NM)/4} sum_{n mod M} e^{-pi i N (n+k)^2 / M}.
inline std::pair<Complex, Complex> gauss_reciprocity_check(long N, long M, const Rational &k, mpfr_prec_t prec = default_precision)
{
    check_precision(prec);
    if (N == 0 || M == 0) {
        throw std::invalid_argument("Gauss reciprocity needs nonzero N and M");
    }
    if ((N * M) % 2 != 0) {
        throw std::invalid_argument("Gauss reciprocity needs N M even");
    }
    if (!is_integer(Rational(N) * k)) {
        throw std::invalid_argument("Gauss reciprocity needs N k integral");
    }
    const mpfr_prec_t wp = prec + 32;
    Complex lhs(wp);
    for (long n = 0; n < std::labs(N); ++n) {
        const Rational e = make_rational(M * n * n, N) + 2 * k * n;
        lhs += expi_pi(e, wp);
    }
    Complex rhs(wp);
    for (long n = 0; n < std::labs(M); ++n) {
        const Rational t = k + n;
        const Rational e = -Rational(N) * t * t / M;
        rhs += expi_pi(e, wp);
    }
    const int sgn = (N > 0) == (M > 0) ? 1 : -1;
    rhs = expi_pi(Rational(sgn, 4), wp) * rhs;
    rhs *= sqrt(Real(make_rational(std::labs(N), std::labs(M)), wp));
    return {lhs, rhs};
}

} // namespace swrt

#endif
