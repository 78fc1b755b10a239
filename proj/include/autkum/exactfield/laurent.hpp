#pragma once

#include <vector>

#include "autkum/exactfield/ratfunc.hpp"

namespace autkum {

/// Exact Laurent polynomial sum_{e=lo}^{hi} c_e t^e over F_p.
struct LaurentVector {
    i64 lo = 0;
    i64 hi = 0;
    std::vector<u64> coeffs{0}; // coeffs[e - lo]
    u64 p = 3;

    u64 coeff(i64 e) const noexcept
    {
        return e < lo || e > hi ? 0 : coeffs[static_cast<size_t>(e - lo)];
    }
    bool is_zero() const noexcept
    {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }

    friend bool operator==(const LaurentVector&, const LaurentVector&) = default;
};

/// Shrinks the window to the nonzero range; zero becomes window (0, 0).
inline LaurentVector trim_window(LaurentVector v)
{
    i64 first = v.hi + 1, last = v.lo - 1;
    for (i64 e = v.lo; e <= v.hi; ++e) {
        if (v.coeff(e)) {
            if (first > v.hi) first = e;
            last = e;
        }
    }
    if (first > v.hi) return LaurentVector{0, 0, {0}, v.p};
    std::vector<u64> c(v.coeffs.begin() + (first - v.lo), v.coeffs.begin() + (last - v.lo + 1));
    return LaurentVector{first, last, std::move(c), v.p};
}

inline LaurentVector monomial_vector(i64 e, u64 p, u64 c = 1)
{
    return trim_window(LaurentVector{e, e, {c % p}, p});
}

/// Coefficients of a Laurent polynomial in t; NotLaurent unless the
/// denominator is a power of t.
inline LaurentVector laurent_coeffs(const RatFunc& r)
{
    const u64 p = r.characteristic();
    if (r.is_zero()) return LaurentVector{0, 0, {0}, p};
    if (!r.is_laurent()) throw Error(Errc::NotLaurent, "denominator is not a power of t");
    const i64 shift = r.den().degree();
    const auto& c = r.num().coeffs();
    LaurentVector v{-shift, static_cast<i64>(c.size()) - 1 - shift, c, p};
    return trim_window(std::move(v));
}

inline RatFunc reconstruct(const LaurentVector& v)
{
    const u64 p = v.p;
    if (v.lo >= 0) {
        std::vector<u64> c(static_cast<size_t>(v.lo), 0);
        c.insert(c.end(), v.coeffs.begin(), v.coeffs.end());
        return RatFunc(Poly(std::move(c), p), Poly::constant(1, p));
    }
    return RatFunc(Poly(v.coeffs, p), Poly::monomial(static_cast<u64>(-v.lo), 1, p));
}

} // namespace autkum
