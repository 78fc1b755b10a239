#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autkum/exactfield/field.hpp"

namespace autkum {

/// O or an affine point (x, y).
template <FieldElement F>
struct CurvePoint {
    std::optional<std::pair<F, F>> xy;

    static CurvePoint infinity() { return CurvePoint{std::nullopt}; }
    static CurvePoint affine(F x, F y) { return CurvePoint{std::make_pair(std::move(x), std::move(y))}; }

    bool is_infinity() const noexcept { return !xy.has_value(); }
    const F& x() const { return xy->first; }
    const F& y() const { return xy->second; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b)
    {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return a.x() == b.x() && a.y() == b.y();
    }
};

/// y^2 = x(x-1)(x-lambda), handled in the long Weierstrass shape
/// y^2 = x^3 + a2 x^2 + a4 x with a2 = -(1+lambda), a4 = lambda.
template <FieldElement F>
class LegendreCurve {
public:
    using Point = CurvePoint<F>;

    explicit LegendreCurve(F lambda) : lambda_(std::move(lambda))
    {
        if (lambda_.is_zero() || (lambda_ - lambda_.make(1)).is_zero())
            throw Error(Errc::SingularCurve, "Legendre parameter must avoid 0 and 1");
        if (lambda_.characteristic() == 2) throw Error(Errc::InvalidPrime, "odd characteristic required");
    }

    const F& lambda() const noexcept { return lambda_; }
    F a2() const { return -(lambda_ + lambda_.make(1)); }
    F a4() const { return lambda_; }

    F rhs(const F& x) const { return x * (x - x.make(1)) * (x - lambda_); }

    bool contains(const Point& P) const
    {
        if (P.is_infinity()) return true;
        return P.y() * P.y() == rhs(P.x());
    }

    Point neg(const Point& P) const
    {
        if (P.is_infinity()) return P;
        return Point::affine(P.x(), -P.y());
    }

    /// Chord-tangent addition. Inputs are assumed on the curve; see point_add
    /// for the checked entry point.
    Point add(const Point& P, const Point& Q) const
    {
        if (P.is_infinity()) return Q;
        if (Q.is_infinity()) return P;
        const F& x1 = P.x();
        const F& y1 = P.y();
        const F& x2 = Q.x();
        const F& y2 = Q.y();
        F m = x1.make(0);
        if (x1 == x2) {
            // Q = -P, including doubling a 2-torsion point.
            if ((y1 + y2).is_zero()) return Point::infinity();
            m = (x1.make(3) * x1 * x1 + x1.make(2) * a2() * x1 + a4()) / (x1.make(2) * y1);
        } else {
            m = (y2 - y1) / (x2 - x1);
        }
        F x3 = m * m - a2() - x1 - x2;
        F y3 = m * (x1 - x3) - y1;
        return Point::affine(std::move(x3), std::move(y3));
    }

    Point mul(i64 k, const Point& P) const
    {
        Point base = k < 0 ? neg(P) : P;
        u64 n = k < 0 ? static_cast<u64>(-k) : static_cast<u64>(k);
        Point acc = Point::infinity();
        while (n) {
            if (n & 1) acc = add(acc, base);
            base = add(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// {O, (0,0), (1,0), (lambda,0)}.
    std::vector<Point> two_torsion() const
    {
        const F zero = lambda_.make(0);
        return {Point::infinity(), Point::affine(zero, zero), Point::affine(lambda_.make(1), zero),
                Point::affine(lambda_, zero)};
    }

private:
    F lambda_;
};

/// Group law with membership checks; NotOnCurve if either input is off the curve.
template <FieldElement F>
CurvePoint<F> point_add(const LegendreCurve<F>& c, const CurvePoint<F>& P, const CurvePoint<F>& Q)
{
    if (!c.contains(P) || !c.contains(Q)) throw Error(Errc::NotOnCurve, "point does not satisfy the curve equation");
    return c.add(P, Q);
}

template <FieldElement F>
std::vector<CurvePoint<F>> two_torsion(const LegendreCurve<F>& c)
{
    return c.two_torsion();
}

/// All points of a curve over a finite field, O first, then affine points
/// in (x index, y index) order.
template <FieldElement F>
std::vector<CurvePoint<F>> enumerate_points(const LegendreCurve<F>& c)
{
    using T = FiniteFieldTraits<F>;
    if constexpr (!T::enumerable) {
        throw Error(Errc::NotFinite, "base field is infinite");
    } else {
        const F& s = c.lambda();
        const u64 q = T::size(s);
        if (q > kMaxFieldSize) throw Error(Errc::TooLarge, "field too large to enumerate");
        std::vector<std::vector<u64>> roots(q);
        for (u64 i = 0; i < q; ++i) {
            F y = T::element_at(s, i);
            roots[T::index(y * y)].push_back(i);
        }
        std::vector<CurvePoint<F>> pts{CurvePoint<F>::infinity()};
        for (u64 i = 0; i < q; ++i) {
            F x = T::element_at(s, i);
            for (u64 j : roots[T::index(c.rhs(x))]) pts.push_back(CurvePoint<F>::affine(x, T::element_at(s, j)));
        }
        return pts;
    }
}

/// Number of points (affine solutions plus O) by brute force; NotFinite
/// over F_p(t).
template <FieldElement F>
u64 point_count(const LegendreCurve<F>& c)
{
    using T = FiniteFieldTraits<F>;
    if constexpr (!T::enumerable) {
        throw Error(Errc::NotFinite, "point count needs a finite base field");
    } else {
        const F& s = c.lambda();
        const u64 q = T::size(s);
        if (q > kMaxFieldSize) throw Error(Errc::TooLarge, "field too large to enumerate");
        std::vector<u64> sqrt_count(q, 0);
        for (u64 i = 0; i < q; ++i) {
            F y = T::element_at(s, i);
            ++sqrt_count[T::index(y * y)];
        }
        u64 n = 1;
        for (u64 i = 0; i < q; ++i) n += sqrt_count[T::index(c.rhs(T::element_at(s, i)))];
        return n;
    }
}

/// |q + 1 - n| <= 2 sqrt(q), checked in integers.
inline bool hasse_bound_holds(u64 q, u64 n)
{
    const i64 a = static_cast<i64>(q) + 1 - static_cast<i64>(n);
    return a * a <= 4 * static_cast<i64>(q);
}

} // namespace autkum
