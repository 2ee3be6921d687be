#pragma once

// Dense univariate polynomials over the rationals, plus the interpolation
// helpers the formula-fitting code relies on. Coefficients are stored in
// ascending degree with a nonzero leading coefficient (empty = zero).

#include "radcoeff/numbers.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace radcoeff {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RatPoly constant(const Rational& v)
    {
        return v == 0 ? RatPoly() : RatPoly(std::vector<Rational>{v});
    }
    // x^n with coefficient a
    static RatPoly monomial(const Rational& a, size_t n)
    {
        if (a == 0) return RatPoly();
        std::vector<Rational> c(n + 1, Rational(0));
        c[n] = a;
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b)
    {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b)
    {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a)
    {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x = -x;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const Rational& s)
    {
        if (s == 0) return RatPoly();
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return RatPoly(std::move(c));
    }

    Rational eval(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Euclidean division; divisor must be nonzero.
    struct DivMod {
        RatPoly quotient, remainder;
    };
    DivMod divmod(const RatPoly& d) const
    {
        if (d.is_zero()) throw std::invalid_argument("RatPoly::divmod: division by zero polynomial");
        std::vector<Rational> rem = c_;
        long dd = d.degree();
        long qd = degree() - dd;
        if (qd < 0) return {RatPoly(), *this};
        std::vector<Rational> quo(static_cast<size_t>(qd) + 1, Rational(0));
        Rational lead = d.leading();
        for (long i = degree(); i >= dd; --i) {
            Rational& top = rem[static_cast<size_t>(i)];
            if (top == 0) continue;
            Rational f = top / lead;
            quo[static_cast<size_t>(i - dd)] = f;
            for (long j = 0; j <= dd; ++j)
                rem[static_cast<size_t>(i - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
        }
        return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
    }

    // gcd of numerators / lcm of denominators, signed to make the primitive
    // part have a positive leading coefficient.
    Rational content() const
    {
        if (is_zero()) return Rational(0);
        Int g(0), l(1);
        for (const auto& x : c_) {
            if (x == 0) continue;
            Int num = numerator(x) < 0 ? Int(-numerator(x)) : numerator(x);
            mpz_gcd(g.backend().data(), g.backend().data(), num.backend().data());
            mpz_lcm(l.backend().data(), l.backend().data(), denominator(x).backend().data());
        }
        Rational c(g, l);
        return leading() < 0 ? -c : c;
    }
    RatPoly primitive_part() const
    {
        if (is_zero()) return RatPoly();
        return *this * (Rational(1) / content());
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const Rational& a = c_[static_cast<size_t>(i)];
            if (a == 0) continue;
            Rational mag = a < 0 ? -a : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1) && i > 0;
            if (!unit) os << to_canonical(mag);
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Interpolating polynomial through distinct nodes (Newton's divided
// differences, exact).
inline RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolate: need matching nonempty node/value lists");
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            if (dx == 0) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    // Horner over the Newton basis.
    RatPoly p = RatPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        RatPoly lin(std::vector<Rational>{-xs[i], Rational(1)});
        p = p * lin + RatPoly::constant(dd[i]);
    }
    return p;
}

// Least degree d such that the d-th forward differences of consecutive
// samples (taken at unit-spaced nodes) are constant, confirmed over at least
// two entries; -1 if the window is too short to confirm any degree (the data
// is not polynomial of low degree over the sampled window).
inline long polynomial_degree_of(const std::vector<Rational>& values)
{
    std::vector<Rational> row = values;
    for (long d = 0; row.size() >= 2; ++d) {
        bool constant = std::all_of(row.begin() + 1, row.end(),
                                    [&](const Rational& v) { return v == row.front(); });
        if (constant) return d;
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return -1;
}

} // namespace radcoeff
