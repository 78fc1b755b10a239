#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "autkum/error.hpp"

namespace autkum {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Throws InvalidPrime unless p is an odd prime.
inline void require_odd_prime(u64 p)
{
    if (p == 2 || !is_prime(p))
        throw Error(Errc::InvalidPrime, "odd prime required, got " + std::to_string(p));
}

inline u64 reduce_signed(i64 v, u64 p) noexcept
{
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
}

inline u64 mul_mod(u64 a, u64 b, u64 p) noexcept
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 inv_mod(u64 a, u64 p)
{
    if (a % p == 0) throw Error(Errc::ZeroInverse, "inverse of zero in F_" + std::to_string(p));
    i64 r0 = static_cast<i64>(p), r1 = static_cast<i64>(a % p);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    return reduce_signed(s0, p);
}

/// Element of the prime field F_p. The modulus travels with the value;
/// mixing moduli raises FieldMismatch.
class Fp {
public:
    Fp(i64 v, u64 p) : v_(reduce_signed(v, p)), p_(p) {}

    static Fp from_residue(u64 v, u64 p) { return Fp(v % p, p, raw_tag{}); }

    u64 value() const noexcept { return v_; }
    u64 modulus() const noexcept { return p_; }
    u64 characteristic() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Fp make(i64 k) const { return Fp(k, p_); }
    Fp zero() const { return Fp(0, p_, raw_tag{}); }
    Fp one() const { return Fp(1, p_, raw_tag{}); }

    Fp inverse() const { return Fp(inv_mod(v_, p_), p_, raw_tag{}); }

    Fp pow(i64 e) const
    {
        Fp base = e < 0 ? inverse() : *this;
        u64 n = e < 0 ? static_cast<u64>(-e) : static_cast<u64>(e);
        Fp acc = one();
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend Fp operator+(const Fp& a, const Fp& b)
    {
        check(a, b);
        u64 s = a.v_ + b.v_;
        return Fp(s >= a.p_ ? s - a.p_ : s, a.p_, raw_tag{});
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        check(a, b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, raw_tag{});
    }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        check(a, b);
        return Fp(mul_mod(a.v_, b.v_, a.p_), a.p_, raw_tag{});
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b)
    {
        check(a, b);
        return a.v_ == b.v_;
    }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
    struct raw_tag {};
    Fp(u64 v, u64 p, raw_tag) : v_(v), p_(p) {}

    static void check(const Fp& a, const Fp& b)
    {
        if (a.p_ != b.p_)
            throw Error(Errc::FieldMismatch,
                        "F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
    }

    u64 v_;
    u64 p_;
};

/// Validated descriptor for F_p.
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(p) { require_odd_prime(p); }

    u64 p() const noexcept { return p_; }
    u64 size() const noexcept { return p_; }
    Fp operator()(i64 v) const { return Fp(v, p_); }
    Fp element_at(u64 idx) const { return Fp::from_residue(idx, p_); }

private:
    u64 p_;
};

} // namespace autkum
