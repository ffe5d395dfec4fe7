#ifndef SEIFERT_WRT_TOPOLOGY_HPP
#define SEIFERT_WRT_TOPOLOGY_HPP

#include "asymptotic.hpp"
#include "eichler.hpp"
#include "exactmath.hpp"
#include "periodic.hpp"
#include "seifert.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace swrt
{

/// Interior multi-indices strictly below the hyperplane sum l_j/p_j = 1.
inline std::int64_t lattice_count(const SeifertData &s)
{
    std::int64_t count = 0;
    for_each_interior(s, [&](const MultiIndex &l) {
        if (index_weight(s, l) < 1) {
            ++count;
        }
    });
    return count;
}

/// Mordell-type closed form for the number of non-vanishing Eichler integrals at integers.
inline std::int64_t gamma_closed(const SeifertData &s)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("gamma_closed needs four fibers");
    }
    const long P = static_cast<long>(s.P());
    const Rational Pq(P);
    Rational g = Rational(-3, 8) + make_rational(P, 12);
    Rational sum_p(0);
    for (long pj : s.p()) {
        g -= Pq * make_rational(1 + pj, pj * pj) / 24;
        sum_p += pj;
    }
    g -= (1 - sum_p) / (24 * Pq);
    for (std::size_t j = 0; j < 4; ++j) {
        g += dedekind_sum(P / s.p(j), s.p(j)) / 2;
        for (std::size_t k = 0; k < 4; ++k) {
            if (j == k) {
                continue;
            }
            g += Pq * make_rational(1, s.p(j) * s.p(j) * s.p(k)) / 24;
            g -= dedekind_sum(P / (s.p(j) * s.p(k)), s.p(j)) / 2;
        }
    }
    g.canonicalize();
    if (!is_integer(g) || g < 0) {
        throw std::logic_error("gamma closed form gave " + to_string(g) + " for " + s.label());
    }
    return g.get_num().get_si();
}

/// Casson invariant of Sigma(p_1, ..., p_M).
inline Rational casson(std::span<const long> p)
{
    const SeifertData s = new_seifert(p);
    const long M = static_cast<long>(s.fiber_count());
    const Rational P(static_cast<long>(s.P()));
    Rational acc(1);
    Rational ds(0);
    for (long pj : s.p()) {
        const Rational c = P / pj;
        acc += c * c;
        ds += dedekind_sum(static_cast<long>(s.P() / pj), pj);
    }
    acc -= (M - 2) * P * P;
    Rational out = Rational(-1, 8) + acc / (24 * P) - ds / 2;
    out.canonicalize();
    return out;
}

inline Rational casson(std::initializer_list<long> p)
{
    return casson(std::span<const long>(p.begin(), p.size()));
}

/// CS = -(P/4)(1 + sum l_j/p_j)^2 in (-1, 0]; one zero entry is allowed.
inline Rational cs_invariant(const SeifertData &s, const MultiIndex &l)
{
    if (l.size() != s.fiber_count()) {
        throw std::invalid_argument("multi-index " + l.to_string() + " does not match " + s.label());
    }
    int zeros = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j] < 0 || l[j] >= s.p(j)) {
            throw std::invalid_argument("multi-index " + l.to_string() + " out of range for " + s.label());
        }
        zeros += l[j] == 0;
    }
    if (zeros > 1) {
        throw std::invalid_argument("multi-index " + l.to_string() + " has more than one zero entry");
    }
    const Rational w = 1 + index_weight(s, l);
    Rational v = -make_rational(static_cast<long>(s.P()), 4) * w * w;
    v -= Rational(floor(v));
    if (v > 0) {
        v -= 1;
    }
    v.canonicalize();
    return v;
}

struct RepClass
{
    MultiIndex l;
    Rational sum_l_over_p;
    /// C_p(l) for interior rows; zero for missing rows
    Rational c_value;
    Rational cs;
};

struct RepTable
{
    /// canonical interior representatives with C_p(l) != 0
    std::vector<RepClass> interior;
    /// one zero entry; the remaining triple is a non-vanishing canonical three-fiber representative
    std::vector<RepClass> missing;
};

/// sum_{n=1}^{2P} chi(n) B_{M-2}(n / 2P) for interior l.
inline Rational bernoulli_weight(const SeifertData &s, const MultiIndex &l)
{
    const long M = static_cast<long>(s.fiber_count());
    const auto f = chi(s, l);
    const long twoP = 2 * static_cast<long>(s.P());
    Rational acc(0);
    for (const auto &[r, v] : f.support()) {
        const long n = r == 0 ? twoP : static_cast<long>(r);
        acc += v * bernoulli_poly(M - 2, make_rational(n, twoP));
    }
    acc.canonicalize();
    return acc;
}

inline RepTable rep_table(const SeifertData &s)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("rep_table needs four fibers");
    }
    RepTable out;
    for (const auto &l : canonical_multiindices(s)) {
        const Rational c = c_p(s, l);
        if (c == 0) {
            continue;
        }
        out.interior.push_back(RepClass{l, index_weight(s, l), c, cs_invariant(s, l)});
    }
    for (std::size_t omit = 4; omit-- > 0;) {
        std::vector<long> rest;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != omit) {
                rest.push_back(s.p(j));
            }
        }
        const SeifertData triple = new_seifert(rest);
        for (const auto &t : canonical_multiindices(triple)) {
            if (bernoulli_weight(triple, t) == 0) {
                continue;
            }
            MultiIndex l{std::vector<long>(t.l)};
            l.l.insert(l.l.begin() + static_cast<std::ptrdiff_t>(omit), 0);
            out.missing.push_back(RepClass{l, index_weight(s, l), Rational(0), cs_invariant(s, l)});
        }
    }
    return out;
}

/// lambda_0 .. lambda_{n_max} of the Ohtsuki series.
inline std::vector<Rational> ohtsuki(const SeifertData &s, long n_max)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("ohtsuki needs four fibers");
    }
    if (n_max < 0) {
        throw std::invalid_argument("ohtsuki needs n_max >= 0");
    }
    const Rational fourP(4 * static_cast<long>(s.P()));
    const auto T = t_series_via_sinh(s, n_max + 1);
    // c_j = sum_{k=1}^{j+1} T(k)/(4P)^k S_{j+1}^{(k)} / (j+1)!
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long j = 0; j <= n_max; ++j) {
        Rational acc(0);
        Rational scale(1);
        for (long k = 1; k <= j + 1; ++k) {
            scale /= fourP;
            acc += T[static_cast<std::size_t>(k)] * scale * Rational(stirling_first(j + 1, k));
        }
        c[static_cast<std::size_t>(j)] = acc / Rational(factorial(j + 1));
    }
    const Rational r = (2 - s.phi()) / 4;
    std::vector<Rational> out;
    for (long n = 0; n <= n_max; ++n) {
        Rational acc(0);
        for (long j = 0; j <= n; ++j) {
            acc += gen_binomial(r, n - j) * c[static_cast<std::size_t>(j)];
        }
        acc.canonicalize();
        out.push_back(acc);
    }
    return out;
}

struct ConjectureReport
{
    std::int64_t D = 0;
    std::int64_t gamma_count = 0;
    std::int64_t lattice_points = 0;
    bool holds = false;
};

/// Compares D - #{canonical l with nonzero B_{M-2}-weighted sum} against the lattice count.
inline ConjectureReport conjecture_check(std::span<const long> p)
{
    const SeifertData s = new_seifert(p);
    if (s.P() > 100000) {
        throw std::invalid_argument("conjecture_check is limited to products up to 100000");
    }
    ConjectureReport r;
    r.D = dimension_D(s);
    for (const auto &l : canonical_multiindices(s)) {
        r.gamma_count += bernoulli_weight(s, l) != 0;
    }
    r.lattice_points = lattice_count(s);
    r.holds = r.D - r.gamma_count == r.lattice_points;
    return r;
}

inline ConjectureReport conjecture_check(std::initializer_list<long> p)
{
    return conjecture_check(std::span<const long>(p.begin(), p.size()));
}

/// gamma(p) = sum of Casson invariants of the four sub-triples minus that of the 4-tuple.
inline bool explicit_gamma_check(const SeifertData &s)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("explicit_gamma_check needs four fibers");
    }
    Rational rhs = -casson(s.p());
    for (std::size_t omit = 0; omit < 4; ++omit) {
        std::vector<long> rest;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != omit) {
                rest.push_back(s.p(j));
            }
        }
        rhs += casson(rest);
    }
    return rhs == Rational(gamma_closed(s));
}

struct InvariantReport
{
    std::int64_t D = 0;
    std::int64_t gamma = 0;
    std::int64_t lattice_points = 0;
    Rational phi;
    Rational casson;
    std::vector<Rational> ohtsuki;
};

inline InvariantReport invariant_report(const SeifertData &s, long n_max)
{
    InvariantReport r;
    r.D = dimension_D(s);
    r.gamma = gamma_closed(s);
    r.lattice_points = lattice_count(s);
    r.phi = s.phi();
    r.casson = casson(s.p());
    r.ohtsuki = ohtsuki(s, n_max);
    if (r.D - r.gamma != r.lattice_points) {
        throw std::logic_error("D - gamma differs from the lattice count for " + s.label());
    }
    return r;
}

} // namespace swrt

#endif
