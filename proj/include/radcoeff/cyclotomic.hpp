#pragma once

// Exact arithmetic in the k-th cyclotomic field Q(zeta_k). Elements are
// stored on the power basis 1, zeta, ..., zeta^(phi(k)-1), i.e. reduced
// modulo the k-th cyclotomic polynomial, so equality is coordinate equality.

#include "radcoeff/bigfloat.hpp"
#include "radcoeff/numbers.hpp"
#include "radcoeff/polynomial.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace radcoeff {

// Phi_k, monic with integer coefficients: Phi_1 = x - 1, and
// Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d.
inline RatPoly cyclotomic_poly(long k)
{
    if (k < 1) throw std::invalid_argument("cyclotomic_poly: k must be >= 1");
    static std::map<long, RatPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::function<RatPoly(long)> get = [&](long n) -> RatPoly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        RatPoly result;
        if (n == 1) {
            result = RatPoly(std::vector<Rational>{Rational(-1), Rational(1)});
        } else {
            std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
            c[0] = -1;
            c[static_cast<size_t>(n)] = 1;
            RatPoly xn_minus_1(std::move(c));
            RatPoly denom = RatPoly::constant(Rational(1));
            for (long d : divisors(n))
                if (d < n) denom = denom * get(d);
            auto dm = xn_minus_1.divmod(denom);
            if (!dm.remainder.is_zero())
                throw std::logic_error("cyclotomic_poly: non-exact division");
            result = dm.quotient;
        }
        cache.emplace(n, result);
        return result;
    };
    return get(k);
}

namespace detail {

// Per-order reduction data: coords of x^t mod Phi_k for t = 0..t_max where
// t_max = max(k-1, 2*phi-2), covering both products and zeta powers.
struct CycloTable {
    long phi = 0;
    std::vector<std::vector<Rational>> power; // power[t] has length phi
};

inline const CycloTable& cyclo_table(long k)
{
    static std::map<long, CycloTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    CycloTable t;
    t.phi = euler_phi(k);
    RatPoly Phi = cyclotomic_poly(k);
    long t_max = std::max(k - 1, 2 * t.phi - 2);
    size_t phi = static_cast<size_t>(t.phi);
    t.power.reserve(static_cast<size_t>(t_max) + 1);
    std::vector<Rational> cur(phi, Rational(0));
    cur[0] = 1;
    t.power.push_back(cur);
    for (long e = 1; e <= t_max; ++e) {
        // multiply by x, then fold x^phi = -(lower part of Phi)
        Rational top = cur[phi - 1];
        for (size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t i = 0; i < phi; ++i) cur[i] -= top * Phi.coeff(i);
        t.power.push_back(cur);
    }
    return cache.emplace(k, std::move(t)).first->second;
}

} // namespace detail

class CycloElem {
public:
    CycloElem() : order_(1), coords_(1, Rational(0)) {}
    CycloElem(long order, std::vector<Rational> coords) : order_(order), coords_(std::move(coords))
    {
        if (order_ < 1) throw std::invalid_argument("CycloElem: order must be >= 1");
        if (static_cast<long>(coords_.size()) != euler_phi(order_))
            throw std::invalid_argument("CycloElem: coords length must equal phi(order)");
    }

    static CycloElem zero(long order)
    {
        return CycloElem(order, std::vector<Rational>(static_cast<size_t>(euler_phi(order)), Rational(0)));
    }
    static CycloElem one(long order) { return from_rational(order, Rational(1)); }
    static CycloElem from_rational(long order, const Rational& v)
    {
        CycloElem e = zero(order);
        e.coords_[0] = v;
        return e;
    }
    // zeta_order^t, any integer t
    static CycloElem zeta_power(long order, long t)
    {
        long tm = ((t % order) + order) % order;
        return CycloElem(order, detail::cyclo_table(order).power[static_cast<size_t>(tm)]);
    }

    long order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }
    // Requires is_rational().
    Rational rational_value() const
    {
        if (!is_rational()) throw std::domain_error("CycloElem: not a rational value");
        return coords_[0];
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b)
    {
        return a.order_ == b.order_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b)
    {
        check_orders(a, b);
        CycloElem r = a;
        for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b)
    {
        check_orders(a, b);
        CycloElem r = a;
        for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a)
    {
        CycloElem r = a;
        for (auto& c : r.coords_) c = -c;
        return r;
    }
    CycloElem& operator+=(const CycloElem& b)
    {
        check_orders(*this, b);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
        return *this;
    }

    friend CycloElem operator*(const CycloElem& a, const Rational& s)
    {
        CycloElem r = a;
        for (auto& c : r.coords_) c *= s;
        return r;
    }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b)
    {
        check_orders(a, b);
        size_t phi = a.coords_.size();
        if (phi == 1) {
            CycloElem r = a;
            r.coords_[0] *= b.coords_[0];
            return r;
        }
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (size_t i = 0; i < phi; ++i) {
            if (a.coords_[i] == 0) continue;
            for (size_t j = 0; j < phi; ++j) {
                if (b.coords_[j] == 0) continue;
                conv[i + j] += a.coords_[i] * b.coords_[j];
            }
        }
        const auto& table = detail::cyclo_table(a.order_);
        CycloElem r = zero(a.order_);
        for (size_t t = 0; t < conv.size(); ++t) {
            if (conv[t] == 0) continue;
            if (t < phi) {
                r.coords_[t] += conv[t];
            } else {
                const auto& row = table.power[t];
                for (size_t i = 0; i < phi; ++i) r.coords_[i] += conv[t] * row[i];
            }
        }
        return r;
    }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_k (irreducible over Q, so the gcd with any nonzero element is 1).
    CycloElem inverse() const
    {
        if (is_zero()) throw std::domain_error("CycloElem: division by zero");
        if (coords_.size() == 1) return from_rational(order_, Rational(1) / coords_[0]);
        RatPoly a(std::vector<Rational>(coords_));
        RatPoly b = cyclotomic_poly(order_);
        // maintain u with u*a = r (mod Phi)
        RatPoly r0 = a, r1 = b;
        RatPoly u0 = RatPoly::constant(Rational(1)), u1;
        while (!r1.is_zero()) {
            auto dm = r0.divmod(r1);
            RatPoly r2 = dm.remainder;
            RatPoly u2 = u0 - dm.quotient * u1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r0.degree() != 0)
            throw std::logic_error("CycloElem::inverse: gcd with Phi_k not constant");
        RatPoly inv_poly = u0 * (Rational(1) / r0.coeff(0));
        auto dm = inv_poly.divmod(cyclotomic_poly(order_));
        CycloElem r = zero(order_);
        for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = dm.remainder.coeff(i);
        return r;
    }

    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

    // Galois image under zeta -> zeta^(-1); for elements of a real pair this
    // is complex conjugation.
    CycloElem conj() const
    {
        if (coords_.size() == 1) return *this;
        CycloElem r = zero(order_);
        for (size_t j = 0; j < coords_.size(); ++j) {
            if (coords_[j] == 0) continue;
            long e = static_cast<long>((order_ - static_cast<long>(j) % order_) % order_);
            const auto& row = detail::cyclo_table(order_).power[static_cast<size_t>(e)];
            for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += coords_[j] * row[i];
        }
        return r;
    }

    Complex embed(long prec_bits) const
    {
        Complex acc(prec_bits);
        for (size_t j = 0; j < coords_.size(); ++j) {
            if (coords_[j] == 0) continue;
            Complex w = unit_root(order_, static_cast<long>(j), prec_bits);
            acc += w * BigFloat::of(coords_[j], prec_bits);
        }
        return acc;
    }

private:
    static void check_orders(const CycloElem& a, const CycloElem& b)
    {
        if (a.order_ != b.order_)
            throw std::invalid_argument("CycloElem: mixed cyclotomic orders");
    }
    long order_;
    std::vector<Rational> coords_;
};

} // namespace radcoeff
