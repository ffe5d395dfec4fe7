#ifndef SEIFERT_WRT_VERIFY_HPP
#define SEIFERT_WRT_VERIFY_HPP

#include "asymptotic.hpp"
#include "topology.hpp"
#include "wrt.hpp"

#include <random>
#include <string>
#include <vector>

namespace swrt
{

/// Outcome of one oracle suite.
struct SuiteResult
{
    std::string name;
    std::string detail;
    /// largest observed deviation (0 for exact suites)
    double max_deviation = 0;
    double tolerance = 0;
    bool passed = false;
};

namespace detail
{

inline double deviation(const Complex &a, const Complex &b)
{
    return (a - b).abs().to_double();
}

} // namespace detail

/// sum w^{(k+1)n} / (1 - w^n)^2 against the Bernoulli closed form, every k, N = 2 .. n_max.
inline SuiteResult verify_omega(long n_max = 25, mpfr_prec_t prec = default_precision)
{
    SuiteResult r{"omega", "all k, N = 2.." + std::to_string(n_max), 0, 1e-25, true};
    for (long N = 2; N <= n_max; ++N) {
        for (long k = 0; k < N; ++k) {
            const auto [lhs, rhs] = omega_identity_check(N, k, prec);
            r.max_deviation = std::max(r.max_deviation, detail::deviation(lhs, rhs));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

/// Quadratic Gauss sum reciprocity on `count` random admissible (N, M, k).
inline SuiteResult verify_gauss(int count = 20, unsigned seed = 20240601u, mpfr_prec_t prec = default_precision)
{
    SuiteResult r{"gauss", std::to_string(count) + " random (N, M, k)", 0, 1e-25, true};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> mag(1, 40);
    std::uniform_int_distribution<int> coin(0, 1);
    int done = 0;
    while (done < count) {
        long N = mag(rng) * (coin(rng) ? 1 : -1);
        long M = mag(rng) * (coin(rng) ? 1 : -1);
        if ((N * M) % 2 != 0) {
            continue;
        }
        std::uniform_int_distribution<long> num(0, std::labs(N) - 1);
        const Rational k = make_rational(num(rng), std::labs(N));
        const auto [lhs, rhs] = gauss_reciprocity_check(N, M, k, prec);
        r.max_deviation = std::max(r.max_deviation, detail::deviation(lhs, rhs));
        ++done;
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

/// prefactor * tau_N against the Eichler-limit sum for N in [n_lo, n_hi].
inline SuiteResult verify_theorem3(const std::vector<std::vector<long>> &tuples, long n_lo = 3, long n_hi = 12,
                                   mpfr_prec_t prec = default_precision)
{
    SuiteResult r{"theorem3", "N = " + std::to_string(n_lo) + ".." + std::to_string(n_hi), 0, 1e-20, true};
    for (const auto &p : tuples) {
        const SeifertData s = new_seifert(p);
        for (long N = n_lo; N <= n_hi; ++N) {
            const WrtValue w = tau_exact(s, N, prec);
            const Complex lhs = lhs_prefactor(s, N, prec) * w.tau_n;
            const Complex rhs = wrt_via_eichler(s, N, prec);
            r.max_deviation = std::max(r.max_deviation, detail::deviation(lhs, rhs));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

/// Bernoulli, L-value and sinh-Taylor routes of T(k), k <= k_max, compared exactly.
inline SuiteResult verify_tseries(const std::vector<std::vector<long>> &tuples, long k_max = 5)
{
    SuiteResult r{"tseries", "k <= " + std::to_string(k_max), 0, 0, true};
    for (const auto &p : tuples) {
        const SeifertData s = new_seifert(p);
        const auto sinh_route = t_series_via_sinh(s, k_max);
        for (long k = 0; k <= k_max; ++k) {
            const Rational a = t_series(s, k);
            if (a != t_series_via_L(s, k) || a != sinh_route[static_cast<std::size_t>(k)]) {
                r.passed = false;
                r.max_deviation = 1;
                r.detail += "; mismatch at " + s.label() + " k=" + std::to_string(k);
            }
        }
    }
    return r;
}

inline SuiteResult verify_conjecture(const std::vector<long> &p)
{
    const ConjectureReport c = conjecture_check(std::span<const long>(p));
    SuiteResult r{"conjecture", "", 0, 0, c.holds};
    r.detail = new_seifert(p).label() + ": D=" + std::to_string(c.D) + " gamma=" + std::to_string(c.gamma_count)
               + " lattice=" + std::to_string(c.lattice_points);
    r.max_deviation = static_cast<double>(std::llabs(c.D - c.gamma_count - c.lattice_points));
    return r;
}

} // namespace swrt

#endif
