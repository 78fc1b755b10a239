#pragma once

#include <utility>

#include "autkum/exactfield/poly.hpp"

namespace autkum {

/// Element of F_p(t) in canonical form: monic denominator coprime to the
/// numerator, zero stored as 0/1. Equal values have equal representations.
class RatFunc {
public:
    /// Canonicalizes num/den; throws DivisionByZero when den is zero.
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        num_.check(den_.modulus());
        if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
        normalize();
    }

    static RatFunc constant(i64 c, u64 p) { return RatFunc(Poly::constant(c, p), Poly::constant(1, p), canonical_tag{}); }
    static RatFunc t(u64 p) { return RatFunc(Poly::monomial(1, 1, p), Poly::constant(1, p), canonical_tag{}); }

    /// c * t^e for any integer e.
    static RatFunc monomial(i64 e, i64 c, u64 p)
    {
        if (reduce_signed(c, p) == 0) return constant(0, p);
        if (e >= 0) return RatFunc(Poly::monomial(static_cast<u64>(e), c, p), Poly::constant(1, p), canonical_tag{});
        return RatFunc(Poly::constant(c, p), Poly::monomial(static_cast<u64>(-e), 1, p), canonical_tag{});
    }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    u64 characteristic() const noexcept { return num_.modulus(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }

    /// Denominator is a power of t.
    bool is_laurent() const noexcept { return den_.is_monomial(); }

    RatFunc make(i64 k) const { return constant(k, characteristic()); }

    RatFunc inverse() const
    {
        if (is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero in F_p(t)");
        return RatFunc(den_, num_);
    }

    RatFunc pow(i64 e) const
    {
        if (e < 0) return inverse().pow(-e);
        u64 n = static_cast<u64>(e);
        return RatFunc(num_.pow(n), den_.pow(n), canonical_tag{});
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const { return RatFunc(-num_, den_, canonical_tag{}); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        a.num_.check(b.characteristic());
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct canonical_tag {};
    RatFunc(Poly num, Poly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize()
    {
        const u64 p = den_.modulus();
        if (num_.is_zero()) {
            den_ = Poly::constant(1, p);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const u64 s = inv_mod(den_.lead(), p);
        num_ = num_.scale(s);
        den_ = den_.scale(s);
    }

    Poly num_;
    Poly den_;
};

/// ratfunc_normalize: canonical form of num/den.
inline RatFunc ratfunc_normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

} // namespace autkum
