#pragma once

// Exact integer / rational layer. The value types wrap GMP through
// Boost.Multiprecision; everything downstream (cyclotomic elements, series,
// triangles) is built on these. No floating point in this header.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace radcoeff {

namespace mp = boost::multiprecision;

using Int      = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// GMP keeps mpq_t canonical (lowest terms, positive denominator), so the
// Rational invariants hold after every operation with no extra work here.

inline Int factorial(long n)
{
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f = 1;
    mpz_fac_ui(f.backend().data(), static_cast<unsigned long>(n));
    return f;
}

inline Int binomial(long n, long k)
{
    if (k < 0 || k > n) return Int(0);
    Int b;
    mpz_bin_uiui(b.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

// binom(n, lo), binom(n, lo+1), ..., binom(n, hi) via the multiply/divide
// update along the row (no factorials).
inline std::vector<Int> binomial_row(long n, long lo, long hi)
{
    std::vector<Int> out;
    if (hi < lo) return out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    Int b = binomial(n, lo);
    out.push_back(b);
    for (long j = lo; j < hi; ++j) {
        b *= (n - j);
        b /= (j + 1);
        out.push_back(b);
    }
    return out;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long euler_phi(long n)
{
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long> divisors(long n)
{
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Canonical text form: base-10 "num/den", plain "num" for integers.
inline std::string to_canonical(const Rational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_text(const std::string& s)
{
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_text: cannot parse '" + s + "'");
    }
}

// floor(num/den) for exact rationals (GMP floor division).
inline Int floor_div(const Int& num, const Int& den)
{
    Int q;
    mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
    return q;
}

inline Int rational_floor(const Rational& q)
{
    return floor_div(numerator(q), denominator(q));
}

// x - floor(x) - 1/2, the sawtooth factor in the Dedekind sum.
inline Rational sawtooth(const Rational& x)
{
    return x - Rational(rational_floor(x)) - Rational(1, 2);
}

} // namespace radcoeff
