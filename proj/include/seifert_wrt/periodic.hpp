#ifndef SEIFERT_WRT_PERIODIC_HPP
#define SEIFERT_WRT_PERIODIC_HPP

#include "exactmath.hpp"
#include "seifert.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace swrt
{

/// Labels l = (l_1, ..., l_M), normally with 0 < l_j < p_j.
struct MultiIndex
{
    std::vector<long> l;

    std::size_t size() const
    {
        return l.size();
    }
    long operator[](std::size_t j) const
    {
        return l[j];
    }
    long &operator[](std::size_t j)
    {
        return l[j];
    }
    auto operator<=>(const MultiIndex &) const = default;
    bool operator==(const MultiIndex &) const = default;

    std::string to_string() const
    {
        std::ostringstream os;
        os << "(";
        for (std::size_t j = 0; j < l.size(); ++j) {
            os << (j ? "," : "") << l[j];
        }
        os << ")";
        return os.str();
    }
};

enum class Parity { even, odd };

/// A periodic function with values in {-1, 0, +1}, stored by its support over one period.
class SignedPeriodicFunction
{
public:
    SignedPeriodicFunction(std::int64_t modulus, Parity parity) : modulus_(modulus), parity_(parity)
    {
        if (modulus <= 0) {
            throw std::invalid_argument("periodic function modulus must be positive");
        }
    }

    std::int64_t modulus() const
    {
        return modulus_;
    }
    Parity parity() const
    {
        return parity_;
    }
    /// residue in [0, modulus) -> value; zero values are never stored.
    const std::map<std::int64_t, int> &support() const
    {
        return support_;
    }

    int operator()(std::int64_t n) const
    {
        const auto it = support_.find(mod_floor(n, modulus_));
        return it == support_.end() ? 0 : it->second;
    }

    /// Adds `value` at residue n; residues summing to zero leave the support.
    void accumulate(std::int64_t n, int value)
    {
        const auto r = mod_floor(n, modulus_);
        const int v = (support_[r] += value);
        if (v == 0) {
            support_.erase(r);
        }
    }

    long period_sum() const
    {
        long acc = 0;
        for (const auto &[r, v] : support_) {
            acc += v;
        }
        return acc;
    }

    bool operator==(const SignedPeriodicFunction &o) const
    {
        return modulus_ == o.modulus_ && support_ == o.support_;
    }

private:
    std::int64_t modulus_;
    Parity parity_;
    std::map<std::int64_t, int> support_;
};

namespace detail
{

inline void check_index_shape(const SeifertData &s, const MultiIndex &l)
{
    if (l.size() != s.fiber_count()) {
        throw std::invalid_argument("multi-index " + l.to_string() + " does not match " + s.label());
    }
}

} // namespace detail

inline bool is_interior(const SeifertData &s, const MultiIndex &l)
{
    if (l.size() != s.fiber_count()) {
        return false;
    }
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j] <= 0 || l[j] >= s.p(j)) {
            return false;
        }
    }
    return true;
}

/// sum_j l_j / p_j
inline Rational index_weight(const SeifertData &s, const MultiIndex &l)
{
    detail::check_index_shape(s, l);
    Rational acc(0);
    for (std::size_t j = 0; j < l.size(); ++j) {
        acc += make_rational(l[j], s.p(j));
    }
    acc.canonicalize();
    return acc;
}

/// chi_{2P}^l: -prod(eps) at P (1 + sum eps_j l_j / p_j) mod 2P, over all sign vectors eps.
/// With `allow_one_zero` a single l_j = 0 is accepted; colliding residues are summed.
inline SignedPeriodicFunction chi(const SeifertData &s, const MultiIndex &l, bool allow_one_zero = false)
{
    detail::check_index_shape(s, l);
    int zeros = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        const bool zero_ok = allow_one_zero && l[j] == 0;
        zeros += l[j] == 0;
        if (!zero_ok && (l[j] <= 0 || l[j] >= s.p(j))) {
            throw std::invalid_argument("multi-index " + l.to_string() + " out of range for " + s.label());
        }
        if (zero_ok && l[j] >= s.p(j)) {
            throw std::invalid_argument("multi-index " + l.to_string() + " out of range for " + s.label());
        }
    }
    if (zeros > 1) {
        throw std::invalid_argument("multi-index " + l.to_string() + " has more than one zero entry");
    }
    const std::int64_t P = s.P();
    const std::size_t M = s.fiber_count();
    SignedPeriodicFunction f(2 * P, M % 2 == 0 ? Parity::even : Parity::odd);
    for (std::uint32_t mask = 0; mask < (1u << M); ++mask) {
        // bit j set means eps_j = -1
        std::int64_t n = P;
        int sign = 1;
        for (std::size_t j = 0; j < M; ++j) {
            const std::int64_t step = (P / s.p(j)) * l[j];
            if (mask & (1u << j)) {
                n -= step;
                sign = -sign;
            } else {
                n += step;
            }
        }
        f.accumulate(n, -sign);
    }
    return f;
}

/// psi_{2P}^{(a)}: +1 at a, -1 at 2P - a.
inline SignedPeriodicFunction psi(std::int64_t P, std::int64_t a)
{
    if (P < 1 || a <= 0 || a >= P) {
        throw std::invalid_argument("psi requires 0 < a < P, got a=" + std::to_string(a) + ", P=" + std::to_string(P));
    }
    SignedPeriodicFunction f(2 * P, Parity::odd);
    f.accumulate(a, 1);
    f.accumulate(2 * P - a, -1);
    return f;
}

/// sigma_i: l_i -> p_i - l_i.
inline MultiIndex apply_involution(const SeifertData &s, MultiIndex l, std::size_t i)
{
    detail::check_index_shape(s, l);
    if (i >= l.size()) {
        throw std::out_of_range("involution index out of range");
    }
    l[i] = s.p(i) - l[i];
    return l;
}

/// sigma_ij = sigma_i o sigma_j.
inline MultiIndex apply_involution_pair(const SeifertData &s, MultiIndex l, std::size_t i, std::size_t j)
{
    if (i == j) {
        throw std::invalid_argument("sigma_ij needs distinct fibers");
    }
    return apply_involution(s, apply_involution(s, std::move(l), j), i);
}

/// The orbit of l under the group generated by all sigma_ij (flips of an even number of entries),
/// sorted and deduplicated.
inline std::vector<MultiIndex> involution_orbit(const SeifertData &s, const MultiIndex &l)
{
    detail::check_index_shape(s, l);
    const std::size_t M = s.fiber_count();
    std::vector<MultiIndex> orbit;
    for (std::uint32_t mask = 0; mask < (1u << M); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) {
            continue;
        }
        MultiIndex m = l;
        for (std::size_t j = 0; j < M; ++j) {
            if (mask & (1u << j)) {
                m[j] = s.p(j) - m[j];
            }
        }
        orbit.push_back(std::move(m));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

/// D = 2^{1-M} prod (p_j - 1).
inline std::int64_t dimension_D(const SeifertData &s)
{
    std::int64_t prod = 1;
    for (long pj : s.p()) {
        prod *= (pj - 1);
    }
    return prod >> (s.fiber_count() - 1);
}

/// Calls f(l) for every interior multi-index in lexicographic order.
template <typename F>
void for_each_interior(const SeifertData &s, F &&f)
{
    const std::size_t M = s.fiber_count();
    MultiIndex l{std::vector<long>(M, 1)};
    while (true) {
        f(static_cast<const MultiIndex &>(l));
        std::size_t j = M;
        while (j > 0) {
            --j;
            if (++l[j] < s.p(j)) {
                break;
            }
            l[j] = 1;
            if (j == 0) {
                return;
            }
        }
    }
}

/// One representative (the lexicographic minimum) per sigma_ij orbit, in increasing order.
inline std::vector<MultiIndex> canonical_multiindices(const SeifertData &s)
{
    const std::size_t M = s.fiber_count();
    std::vector<MultiIndex> reps;
    for_each_interior(s, [&](const MultiIndex &l) {
        for (std::uint32_t mask = 1; mask < (1u << M); ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) {
                continue;
            }
            // Compare the image with l lexicographically without materializing it.
            for (std::size_t j = 0; j < M; ++j) {
                const long v = (mask & (1u << j)) ? s.p(j) - l[j] : l[j];
                if (v < l[j]) {
                    return;
                }
                if (v > l[j]) {
                    break;
                }
            }
        }
        reps.push_back(l);
    });
    return reps;
}

/// Laurent expansion of -z^P prod_j (z^{P/p_j} - z^{-P/p_j}), plus the correction
/// z^P (z^P - z^{-P}) (z^{P s - P} - z^{-P s + P}) with s = sum 1/p_j when s > 1.
struct GeneratingPolyExpansion
{
    /// exponent -> coefficient, zero coefficients dropped
    std::map<std::int64_t, long> laurent;
    bool correction_applied = false;
    /// every exponent lies in [0, 2P)
    bool within_period = false;
    /// coefficients of z^0 ... z^{2P-1}; only meaningful when within_period
    std::vector<long> coefficients;
};

inline GeneratingPolyExpansion expand_generating_poly(const SeifertData &s, bool apply_correction = true)
{
    if (s.fiber_count() != 4) {
        throw std::invalid_argument("generating polynomial is defined for four fibers");
    }
    const std::int64_t P = s.P();
    GeneratingPolyExpansion out;
    auto add = [&](std::int64_t e, long c) {
        const long v = (out.laurent[e] += c);
        if (v == 0) {
            out.laurent.erase(e);
        }
    };
    for (std::uint32_t mask = 0; mask < 16u; ++mask) {
        std::int64_t e = P;
        long c = -1;
        for (std::size_t j = 0; j < 4; ++j) {
            if (mask & (1u << j)) {
                e -= P / s.p(j);
                c = -c;
            } else {
                e += P / s.p(j);
            }
        }
        add(e, c);
    }
    if (apply_correction && s.inverse_sum() > 1) {
        out.correction_applied = true;
        // A = P * sum 1/p_j - P, an integer since P/p_j is.
        const Rational A_q = Rational(static_cast<long>(P)) * s.inverse_sum() - Rational(static_cast<long>(P));
        const std::int64_t A = A_q.get_num().get_si();
        add(2 * P + A, 1);
        add(2 * P - A, -1);
        add(A, -1);
        add(-A, 1);
    }
    out.within_period = std::all_of(out.laurent.begin(), out.laurent.end(),
                                    [&](const auto &kv) { return kv.first >= 0 && kv.first < 2 * P; });
    if (out.within_period) {
        out.coefficients.assign(static_cast<std::size_t>(2 * P), 0);
        for (const auto &[e, c] : out.laurent) {
            out.coefficients[static_cast<std::size_t>(e)] = c;
        }
    }
    return out;
}

} // namespace swrt

#endif
