#ifndef SEIFERT_WRT_SEIFERT_HPP
#define SEIFERT_WRT_SEIFERT_HPP

#include "exactmath.hpp"

#include <cstdint>
#include <initializer_list>
#include <cstdlib>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace swrt
{

/// Raised for fiber tuples that do not describe a Seifert homology sphere.
class invalid_fibers : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Which normalization of phi to use. The four-fiber formula is the one used by the exact sum; the
/// three-fiber variant (Brieskorn spheres) uses the same Dedekind-sum shape with three summands.
enum class FiberConvention { four_fiber, three_fiber };

/// Validated fiber exponents of Sigma(p_1, ..., p_M).
class SeifertData
{
public:
    const std::vector<long> &p() const
    {
        return p_;
    }
    long p(std::size_t j) const
    {
        return p_[j];
    }
    std::size_t fiber_count() const
    {
        return p_.size();
    }
    /// Product of all fiber exponents.
    std::int64_t P() const
    {
        return P_;
    }
    /// Sum of 1/p_j.
    const Rational &inverse_sum() const
    {
        return inverse_sum_;
    }
    /// phi for four fibers. Throws for other fiber counts.
    const Rational &phi() const
    {
        if (!phi_) {
            throw std::logic_error("phi is only defined for four fibers (use phi(s, FiberConvention) for three)");
        }
        return *phi_;
    }

    std::string label() const
    {
        std::ostringstream os;
        os << "Sigma(";
        for (std::size_t j = 0; j < p_.size(); ++j) {
            os << (j ? "," : "") << p_[j];
        }
        os << ")";
        return os.str();
    }

    friend SeifertData new_seifert(std::span<const long> p);

private:
    std::vector<long> p_;
    std::int64_t P_ = 1;
    Rational inverse_sum_;
    std::optional<Rational> phi_;
};

/// Integers q_j with P * sum q_j / p_j = 1.
struct SurgeryData
{
    std::vector<long> q;
};

namespace detail
{

inline Rational phi_formula(std::span<const long> p, std::int64_t P)
{
    // 3 - 1/P + 12 sum_j s(P/p_j, p_j)
    Rational acc = Rational(3) - make_rational(Integer(1), Integer(static_cast<long>(P)));
    for (long pj : p) {
        acc += 12 * dedekind_sum(Integer(static_cast<long>(P / pj)), Integer(pj));
    }
    acc.canonicalize();
    return acc;
}

} // namespace detail

inline SeifertData new_seifert(std::span<const long> p)
{
    if (p.size() < 2 || p.size() > 5) {
        throw invalid_fibers("expected 2 to 5 fiber exponents, got " + std::to_string(p.size()));
    }
    for (long pj : p) {
        if (pj < 2) {
            throw invalid_fibers("fiber exponent " + std::to_string(pj) + " is below 2");
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (gcd_long(p[i], p[j]) != 1) {
                throw invalid_fibers("fiber exponents are not pairwise coprime: gcd(" + std::to_string(p[i]) + ","
                                     + std::to_string(p[j]) + ") = " + std::to_string(gcd_long(p[i], p[j])));
            }
        }
    }
    SeifertData s;
    s.p_.assign(p.begin(), p.end());
    Integer P(1);
    for (long pj : p) {
        P *= pj;
    }
    if (!P.fits_slong_p() || P > Integer(1L << 40)) {
        throw invalid_fibers("product of fiber exponents is too large");
    }
    s.P_ = P.get_si();
    s.inverse_sum_ = 0;
    for (long pj : p) {
        s.inverse_sum_ += Rational(1, pj);
    }
    s.inverse_sum_.canonicalize();
    if (p.size() == 4) {
        s.phi_ = detail::phi_formula(p, s.P_);
    }
    return s;
}

inline SeifertData new_seifert(std::initializer_list<long> p)
{
    return new_seifert(std::span<const long>(p.begin(), p.size()));
}

/// Parses "2,3,5,7".
inline std::vector<long> parse_fibers(const std::string &text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw invalid_fibers("empty entry in fiber list '" + text + "'");
        }
        char *end = nullptr;
        const long v = std::strtol(item.c_str(), &end, 10);
        if (*end != '\0') {
            throw invalid_fibers("not an integer: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

/// phi for the requested convention; M must match it (4 or 3 fibers).
inline Rational phi(const SeifertData &s, FiberConvention convention = FiberConvention::four_fiber)
{
    if (convention == FiberConvention::four_fiber) {
        return s.phi();
    }
    if (s.fiber_count() != 3) {
        throw std::invalid_argument("three-fiber convention requires exactly 3 fibers");
    }
    return detail::phi_formula(s.p(), s.P());
}

/// One solution of P * sum q_j / p_j = 1. For j >= 2 the residue q_j = (P/p_j)^{-1} mod p_j is taken
/// in the symmetric range; q_1 absorbs the remaining multiple of p_1.
inline SurgeryData solve_q(const SeifertData &s)
{
    const auto M = s.fiber_count();
    const Integer P(static_cast<long>(s.P()));
    SurgeryData out;
    out.q.resize(M);
    Integer total(0);
    for (std::size_t j = 0; j < M; ++j) {
        const long pj = s.p(j);
        const long cofactor_mod = static_cast<long>((s.P() / pj) % pj);
        long q = mod_inverse(cofactor_mod, pj);
        if (2 * q > pj) {
            q -= pj;
        }
        out.q[j] = q;
        total += Integer(static_cast<long>(s.P() / pj)) * q;
    }
    // total = 1 + t P; subtract t p_1 from q_1.
    const Integer excess = total - 1;
    if (excess % P != 0) {
        throw std::logic_error("solve_q: residues do not combine to 1 mod P");
    }
    const Integer t = excess / P;
    out.q[0] -= Integer(t * s.p(0)).get_si();
    return out;
}

} // namespace swrt

#endif
