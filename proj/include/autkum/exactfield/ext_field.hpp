#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "autkum/exactfield/poly.hpp"

namespace autkum {

/// Guard for everything that enumerates a finite field.
inline constexpr u64 kMaxFieldSize = 1'000'000;

struct ExtFieldDesc {
    u64 p;
    u64 n;
    u64 q;
    Poly modulus; // monic, irreducible, degree n
};

using ExtField = std::shared_ptr<const ExtFieldDesc>;

/// Monic polynomial of degree n whose non-leading coefficients are the
/// base-p digits of idx (a_0 least significant).
inline Poly monic_from_index(u64 idx, u64 n, u64 p)
{
    std::vector<u64> c(n + 1, 0);
    for (u64 i = 0; i < n; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    c[n] = 1;
    return Poly(std::move(c), p);
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f)
{
    const i64 n = f.degree();
    if (n < 1) return false;
    const u64 p = f.modulus();
    for (i64 d = 1; 2 * d <= n; ++d) {
        u64 count = 1;
        for (i64 i = 0; i < d; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx)
            if ((f % monic_from_index(idx, static_cast<u64>(d), p)).is_zero()) return false;
    }
    return true;
}

/// F_{p^n} with the least monic irreducible modulus in the order of
/// monic_from_index. Deterministic for fixed (p, n).
inline ExtField ext_field_build(u64 p, u64 n)
{
    require_odd_prime(p);
    if (n < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    u64 q = 1;
    for (u64 i = 0; i < n; ++i) {
        if (q > kMaxFieldSize / p)
            throw Error(Errc::TooLarge, "p^n exceeds " + std::to_string(kMaxFieldSize));
        q *= p;
    }
    for (u64 idx = 0; idx < q; ++idx) {
        Poly f = monic_from_index(idx, n, p);
        if (is_irreducible(f)) return std::make_shared<const ExtFieldDesc>(ExtFieldDesc{p, n, q, std::move(f)});
    }
    throw Error(Errc::InternalError, "no irreducible polynomial found");
}

/// Element of F_{p^n} = F_p[a]/(modulus), stored as n coordinates in the basis 1, a, ..., a^{n-1}.
class ExtElem {
public:
    ExtElem(ExtField f, const Poly& rep) : f_(std::move(f))
    {
        rep.check(f_->p);
        Poly r = rep % f_->modulus;
        c_.assign(f_->n, 0);
        for (u64 i = 0; i < f_->n; ++i) c_[i] = r.coeff(static_cast<i64>(i));
    }
    ExtElem(ExtField f, i64 k) : f_(std::move(f)), c_(f_->n, 0) { c_[0] = reduce_signed(k, f_->p); }

    static ExtElem element_at(const ExtField& f, u64 idx)
    {
        ExtElem e(f, 0);
        for (u64 i = 0; i < f->n; ++i) {
            e.c_[i] = idx % f->p;
            idx /= f->p;
        }
        return e;
    }

    /// Generator a of the power basis.
    static ExtElem basis_root(const ExtField& f) { return ExtElem(f, Poly::monomial(1, 1, f->p)); }

    const ExtField& field() const noexcept { return f_; }
    const std::vector<u64>& coords() const noexcept { return c_; }
    u64 characteristic() const noexcept { return f_->p; }

    u64 index() const noexcept
    {
        u64 idx = 0;
        for (u64 i = f_->n; i-- > 0;) idx = idx * f_->p + c_[i];
        return idx;
    }

    bool is_zero() const noexcept
    {
        for (auto x : c_)
            if (x) return false;
        return true;
    }
    bool in_prime_field() const noexcept
    {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }

    Poly to_poly() const { return Poly(c_, f_->p); }

    ExtElem make(i64 k) const { return ExtElem(f_, k); }
    ExtElem inverse() const
    {
        if (is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero in F_" + std::to_string(f_->q));
        return ExtElem(f_, poly_inverse_mod(to_poly(), f_->modulus));
    }
    ExtElem pow(i64 e) const
    {
        ExtElem base = e < 0 ? inverse() : *this;
        u64 n = e < 0 ? static_cast<u64>(-e) : static_cast<u64>(e);
        ExtElem acc = make(1);
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b)
    {
        check(a, b);
        ExtElem r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (a.c_[i] + b.c_[i]) % a.f_->p;
        return r;
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
    ExtElem operator-() const
    {
        ExtElem r = *this;
        for (auto& x : r.c_) x = x ? f_->p - x : 0;
        return r;
    }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b)
    {
        check(a, b);
        return ExtElem(a.f_, a.to_poly() * b.to_poly());
    }
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

    friend bool operator==(const ExtElem& a, const ExtElem& b)
    {
        check(a, b);
        return a.c_ == b.c_;
    }

    /// Coordinates as "[c0,c1,...]", or the bare residue for prime-field elements.
    std::string to_string() const
    {
        if (in_prime_field()) return std::to_string(c_[0]);
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << ']';
        return os.str();
    }

private:
    static void check(const ExtElem& a, const ExtElem& b)
    {
        if (a.f_ == b.f_) return;
        if (a.f_->p != b.f_->p || !(a.f_->modulus == b.f_->modulus))
            throw Error(Errc::FieldMismatch, "elements of different extension fields");
    }

    ExtField f_;
    std::vector<u64> c_;
};

} // namespace autkum
