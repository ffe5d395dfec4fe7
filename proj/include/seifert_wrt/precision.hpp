#ifndef SEIFERT_WRT_PRECISION_HPP
#define SEIFERT_WRT_PRECISION_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace swrt
{

/// Default working precision in bits.
inline constexpr mpfr_prec_t default_precision = 128;

inline void check_precision(mpfr_prec_t prec)
{
    if (prec < 64) {
        throw std::invalid_argument("working precision must be at least 64 bits, got " + std::to_string(prec));
    }
}

/// RAII wrapper around an MPFR real carrying its own precision.
class Real
{
public:
    explicit Real(mpfr_prec_t prec = default_precision)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long value, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(const mpq_class &value, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    Real(const std::string &decimal, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("not a decimal number: '" + decimal + "'");
        }
    }
    Real(const Real &other)
    {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real &&other) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    Real &operator=(const Real &other)
    {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&other) noexcept
    {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real()
    {
        mpfr_clear(v_);
    }

    mpfr_ptr get()
    {
        return v_;
    }
    mpfr_srcptr get() const
    {
        return v_;
    }
    mpfr_prec_t precision() const
    {
        return mpfr_get_prec(v_);
    }
    double to_double() const
    {
        return mpfr_get_d(v_, MPFR_RNDN);
    }
    bool is_zero() const
    {
        return mpfr_zero_p(v_) != 0;
    }

    /// Decimal rendering with `digits` significant digits ("%.{digits}Rg").
    std::string to_string(int digits) const
    {
        char *buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }
    /// Fixed-point rendering with `decimals` digits after the point.
    std::string to_fixed(int decimals) const
    {
        char *buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }
    /// Enough digits to round-trip at this precision.
    std::string to_full_string() const
    {
        return to_string(static_cast<int>(precision() * 0.30103) + 2);
    }

    Real &operator+=(const Real &o)
    {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator-=(const Real &o)
    {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator*=(const Real &o)
    {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator/=(const Real &o)
    {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend Real operator+(const Real &a, const Real &b)
    {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real &a, const Real &b)
    {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real &a, const Real &b)
    {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real &a, const Real &b)
    {
        Real r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real &a)
    {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real &a, const Real &b)
    {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const Real &a, const Real &b)
    {
        return mpfr_greater_p(a.v_, b.v_) != 0;
    }

private:
    mpfr_t v_;
};

inline Real pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline Real sqrt(const Real &x)
{
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real abs(const Real &x)
{
    Real r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real exp(const Real &x)
{
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real max(const Real &a, const Real &b)
{
    return a < b ? b : a;
}

/// 2^e at the given precision.
inline Real pow2(long e, mpfr_prec_t prec)
{
    Real r(1, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

/// Reduces a rational r modulo 2 into [0, 2).
inline mpq_class mod2(const mpq_class &r)
{
    mpz_class two_den = 2 * r.get_den();
    mpz_class num = r.get_num() % two_den;
    if (num < 0) {
        num += two_den;
    }
    mpq_class out(num, r.get_den());
    out.canonicalize();
    return out;
}

/// sin(pi * r) and cos(pi * r) for an exact rational r; the argument is reduced mod 2 before rounding.
inline std::pair<Real, Real> sincos_pi(const mpq_class &r, mpfr_prec_t prec)
{
    const mpq_class red = mod2(r);
    Real s(prec), c(prec);
    if (red == 0) {
        mpfr_set_si(c.get(), 1, MPFR_RNDN);
        return {s, c};
    }
    if (red == 1) {
        mpfr_set_si(c.get(), -1, MPFR_RNDN);
        return {s, c};
    }
    Real arg(prec + 16);
    mpfr_const_pi(arg.get(), MPFR_RNDN);
    Real q(red, prec + 16);
    arg *= q;
    mpfr_sin_cos(s.get(), c.get(), arg.get(), MPFR_RNDN);
    return {s, c};
}

inline Real sin_pi(const mpq_class &r, mpfr_prec_t prec)
{
    return sincos_pi(r, prec).first;
}

inline Real cos_pi(const mpq_class &r, mpfr_prec_t prec)
{
    return sincos_pi(r, prec).second;
}

/// Complex number over Real; both parts share a precision.
class Complex
{
public:
    explicit Complex(mpfr_prec_t prec = default_precision) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im, mpfr_prec_t prec) : re_(prec), im_(prec)
    {
        mpfr_set_d(re_.get(), re, MPFR_RNDN);
        mpfr_set_d(im_.get(), im, MPFR_RNDN);
    }

    const Real &re() const
    {
        return re_;
    }
    const Real &im() const
    {
        return im_;
    }
    Real &re()
    {
        return re_;
    }
    Real &im()
    {
        return im_;
    }
    mpfr_prec_t precision() const
    {
        return std::max(re_.precision(), im_.precision());
    }

    Complex &operator+=(const Complex &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex &operator-=(const Complex &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex &operator*=(const Complex &o)
    {
        *this = *this * o;
        return *this;
    }
    Complex &operator*=(const Real &o)
    {
        re_ *= o;
        im_ *= o;
        return *this;
    }

    friend Complex operator+(const Complex &a, const Complex &b)
    {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend Complex operator-(const Complex &a, const Complex &b)
    {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend Complex operator-(const Complex &a)
    {
        return {-a.re_, -a.im_};
    }
    friend Complex operator*(const Complex &a, const Complex &b)
    {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator*(const Complex &a, const Real &b)
    {
        return {a.re_ * b, a.im_ * b};
    }
    friend Complex operator*(const Real &b, const Complex &a)
    {
        return a * b;
    }
    friend Complex operator/(const Complex &a, const Real &b)
    {
        return {a.re_ / b, a.im_ / b};
    }
    friend Complex operator/(const Complex &a, const Complex &b)
    {
        const Real den = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
    }

    Complex conj() const
    {
        return {re_, -im_};
    }
    Real norm() const
    {
        return re_ * re_ + im_ * im_;
    }
    Real abs() const
    {
        return swrt::sqrt(norm());
    }
    Real arg() const
    {
        Real r(precision());
        mpfr_atan2(r.get(), im_.get(), re_.get(), MPFR_RNDN);
        return r;
    }

    std::string to_string(int digits) const
    {
        std::string im = im_.to_string(digits);
        const bool neg = !im.empty() && im.front() == '-';
        return re_.to_string(digits) + (neg ? " - " : " + ") + (neg ? im.substr(1) : im) + "i";
    }

private:
    Real re_;
    Real im_;
};

/// exp(pi i r) for exact rational r.
inline Complex expi_pi(const mpq_class &r, mpfr_prec_t prec)
{
    auto [s, c] = sincos_pi(r, prec);
    return {std::move(c), std::move(s)};
}

/// exp(i theta) for real theta.
inline Complex expi(const Real &theta)
{
    Real s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

/// exp(z) for complex z.
inline Complex exp(const Complex &z)
{
    const Real m = swrt::exp(z.re());
    Complex e = expi(z.im());
    e *= m;
    return e;
}

/// Principal square root.
inline Complex sqrt(const Complex &z)
{
    const mpfr_prec_t prec = z.precision();
    const Real r = swrt::sqrt(z.abs());
    Real half_arg = z.arg();
    mpfr_div_2ui(half_arg.get(), half_arg.get(), 1, MPFR_RNDN);
    Complex e = expi(half_arg);
    e *= r;
    (void)prec;
    return e;
}

inline Real abs(const Complex &z)
{
    return z.abs();
}

/// Sums `count` terms split into `chunks` fixed contiguous ranges, each accumulated in index order by
/// `chunk_sum(lo, hi)`, then combined by a pairwise tree. The result depends on `chunks` but never on
/// how many threads evaluated the chunks.
template <typename ChunkSum>
Complex chunked_sum(std::uint64_t count, std::size_t chunks, mpfr_prec_t prec, ChunkSum &&chunk_sum)
{
    chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, std::max<std::uint64_t>(count, 1)));
    std::vector<Complex> partial(chunks, Complex(prec));
    const auto bound = [&](std::size_t c) { return count * c / chunks; };

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(chunks, std::thread::hardware_concurrency()));
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            partial[c] = chunk_sum(bound(c), bound(c + 1));
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) {
                    partial[c] = chunk_sum(bound(c), bound(c + 1));
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    for (std::size_t stride = 1; stride < chunks; stride *= 2) {
        for (std::size_t i = 0; i + stride < chunks; i += 2 * stride) {
            partial[i] += partial[i + stride];
        }
    }
    return std::move(partial.front());
}

} // namespace swrt

#endif
