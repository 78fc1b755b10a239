#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "autkum/exactfield/prime_field.hpp"

namespace autkum {

/// Dense univariate polynomial over F_p, coefficient of t^i at index i.
/// Canonical: no trailing zeros, the zero polynomial is empty.
class Poly {
public:
    explicit Poly(u64 p) : p_(p) {}
    Poly(std::vector<u64> coeffs, u64 p) : c_(std::move(coeffs)), p_(p)
    {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static Poly constant(i64 c, u64 p) { return Poly({reduce_signed(c, p)}, p); }
    static Poly monomial(u64 deg, i64 c, u64 p)
    {
        std::vector<u64> v(deg + 1, 0);
        v[deg] = reduce_signed(c, p);
        return Poly(std::move(v), p);
    }

    u64 modulus() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    i64 degree() const noexcept { return static_cast<i64>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    u64 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(i64 i) const noexcept
    {
        return i < 0 || i >= static_cast<i64>(c_.size()) ? 0 : c_[static_cast<size_t>(i)];
    }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    i64 valuation() const noexcept
    {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) return static_cast<i64>(i);
        return 0;
    }

    /// True iff this is c * t^k for some nonzero c.
    bool is_monomial() const noexcept
    {
        return !c_.empty() && valuation() == degree();
    }

    Poly monic() const
    {
        if (is_zero()) return *this;
        return scale(inv_mod(lead(), p_));
    }

    Poly scale(u64 s) const
    {
        std::vector<u64> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = mul_mod(c_[i], s, p_);
        return Poly(std::move(v), p_);
    }

    /// Multiply by t^k, k >= 0.
    Poly shift(u64 k) const
    {
        if (is_zero()) return *this;
        std::vector<u64> v(k, 0);
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v), p_);
    }

    Fp eval(const Fp& x) const
    {
        check(x.modulus());
        Fp acc = x.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Fp::from_residue(*it, p_);
        return acc;
    }

    /// Horner evaluation at an element of any field of characteristic p.
    template <class F>
    F eval_at(const F& x) const
    {
        F acc = x.make(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + x.make(static_cast<i64>(*it));
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        a.check(b.p_);
        std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(static_cast<i64>(i)) + b.coeff(static_cast<i64>(i))) % a.p_;
        return Poly(std::move(v), a.p_);
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const
    {
        std::vector<u64> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] ? p_ - c_[i] : 0;
        return Poly(std::move(v), p_);
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check(b.p_);
        if (a.is_zero() || b.is_zero()) return Poly(a.p_);
        std::vector<u64> v(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return Poly(std::move(v), a.p_);
    }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        a.check(b.p_);
        if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
        const u64 p = a.p_;
        if (a.degree() < b.degree()) return {Poly(p), a};
        std::vector<u64> r = a.c_;
        std::vector<u64> q(static_cast<size_t>(a.degree() - b.degree() + 1), 0);
        const u64 inv_lead = inv_mod(b.lead(), p);
        const size_t db = b.c_.size() - 1;
        for (size_t k = r.size(); k-- > db;) {
            u64 c = mul_mod(r[k], inv_lead, p);
            if (!c) continue;
            q[k - db] = c;
            for (size_t i = 0; i <= db; ++i) r[k - db + i] = (r[k - db + i] + p - mul_mod(c, b.c_[i], p)) % p;
        }
        return {Poly(std::move(q), p), Poly(std::move(r), p)};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    /// Monic gcd (zero if both inputs are zero).
    friend Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly pow(u64 e) const
    {
        Poly acc = constant(1, p_), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    void check(u64 p) const
    {
        if (p != p_) throw Error(Errc::FieldMismatch, "F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<u64> c_;
    u64 p_;
};

/// Inverse of a modulo m (gcd(a, m) must be 1), by the extended Euclidean algorithm.
inline Poly poly_inverse_mod(const Poly& a, const Poly& m)
{
    const u64 p = m.modulus();
    Poly r0 = m, r1 = a % m;
    Poly s0(p), s1 = Poly::constant(1, p);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error(Errc::ZeroInverse, "element not invertible modulo the field polynomial");
    return s0.scale(inv_mod(r0.lead(), p)) % m;
}

} // namespace autkum
