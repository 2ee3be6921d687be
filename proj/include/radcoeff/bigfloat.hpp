#pragma once

// Thin RAII wrapper around MPFR. Every value carries its own precision in
// bits; binary operations round to nearest at the wider of the two operand
// precisions. There is no hidden global precision state, which keeps
// renderings reproducible across platforms and threads.

#include "radcoeff/numbers.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace radcoeff {

constexpr long kMinPrecisionBits = 64;

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kMinPrecisionBits); }
    explicit BigFloat(long prec_bits) { mpfr_init2(v_, clamp(prec_bits)); }

    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, kMinPrecisionBits);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long v, long prec_bits)
    {
        BigFloat x(prec_bits);
        mpfr_set_si(x.v_, v, MPFR_RNDN);
        return x;
    }
    static BigFloat of(double v, long prec_bits)
    {
        BigFloat x(prec_bits);
        mpfr_set_d(x.v_, v, MPFR_RNDN);
        return x;
    }
    static BigFloat of(const Int& v, long prec_bits)
    {
        BigFloat x(prec_bits);
        mpfr_set_z(x.v_, v.backend().data(), MPFR_RNDN);
        return x;
    }
    static BigFloat of(const Rational& v, long prec_bits)
    {
        BigFloat x(prec_bits);
        mpfr_set_q(x.v_, v.backend().data(), MPFR_RNDN);
        return x;
    }

    long precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend BigFloat operator-(const BigFloat& a)
    {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b)
    {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b)
    {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b)
    {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b)
    {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend BigFloat operator*(const BigFloat& a, long b)
    {
        BigFloat r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b)
    {
        BigFloat r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    // Decimal rendering with an explicit count of significant digits.
    std::string to_decimal(int sig_digits) const
    {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", sig_digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    // Hexadecimal rendering with enough digits to read back bit-exactly at
    // the same precision.
    std::string to_hex() const
    {
        char* s = nullptr;
        mpfr_asprintf(&s, "%Ra", v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    static BigFloat from_hex(const std::string& s, long prec_bits)
    {
        BigFloat x(prec_bits);
        char* end = nullptr;
        mpfr_strtofr(x.v_, s.c_str(), &end, 16, MPFR_RNDN);
        if (end == s.c_str()) throw std::invalid_argument("BigFloat::from_hex: cannot parse '" + s + "'");
        return x;
    }

private:
    static long clamp(long p) { return p < 2 ? 2 : p; }
    static long join(const BigFloat& a, const BigFloat& b)
    {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }
    mpfr_t v_;
};

inline BigFloat abs(const BigFloat& a)
{
    BigFloat r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sqrt(const BigFloat& a)
{
    BigFloat r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat cos(const BigFloat& a)
{
    BigFloat r(a.precision());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sin(const BigFloat& a)
{
    BigFloat r(a.precision());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pi(long prec_bits)
{
    BigFloat r(prec_bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
// a^(num/den) for positive a, via exp(log), all at a's precision.
inline BigFloat pow_rational(const BigFloat& a, const Rational& e)
{
    BigFloat le(a.precision());
    mpfr_log(le.raw(), a.raw(), MPFR_RNDN);
    BigFloat ef = BigFloat::of(e, a.precision());
    mpfr_mul(le.raw(), le.raw(), ef.raw(), MPFR_RNDN);
    mpfr_exp(le.raw(), le.raw(), MPFR_RNDN);
    return le;
}
inline BigFloat pow_int(const BigFloat& a, long e)
{
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline BigFloat ldexp2(const BigFloat& a, long e)
{
    BigFloat r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

// cos(pi*q), sin(pi*q) for exact rational q, reduced mod 2 before rounding so
// large numerators cost no precision.
inline BigFloat cos_pi_rational(const Rational& q, long prec_bits)
{
    Rational red = q - 2 * Rational(rational_floor(q / 2));
    BigFloat x = BigFloat::of(red, prec_bits + 16) * pi(prec_bits + 16);
    BigFloat r(prec_bits);
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sin_pi_rational(const Rational& q, long prec_bits)
{
    Rational red = q - 2 * Rational(rational_floor(q / 2));
    BigFloat x = BigFloat::of(red, prec_bits + 16) * pi(prec_bits + 16);
    BigFloat r(prec_bits);
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

struct Complex {
    BigFloat re, im;

    Complex() = default;
    explicit Complex(long prec_bits) : re(prec_bits), im(prec_bits)
    {
        mpfr_set_zero(re.raw(), 1);
        mpfr_set_zero(im.raw(), 1);
    }
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static Complex of_real(const BigFloat& r)
    {
        Complex c(r.precision());
        c.re = r;
        return c;
    }

    long precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
    Complex& operator+=(const Complex& b)
    {
        re += b.re;
        im += b.im;
        return *this;
    }

    Complex conj() const
    {
        Complex c = *this;
        mpfr_neg(c.im.raw(), c.im.raw(), MPFR_RNDN);
        return c;
    }

    BigFloat modulus() const
    {
        BigFloat r(precision());
        mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
        return r;
    }

    friend Complex operator/(const Complex& a, const Complex& b)
    {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

// e^(2*pi*i*j/k) at the requested precision.
inline Complex unit_root(long k, long j, long prec_bits)
{
    Rational q(2 * j, k);
    return {cos_pi_rational(q, prec_bits), sin_pi_rational(q, prec_bits)};
}

} // namespace radcoeff
