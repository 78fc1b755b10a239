#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autkum/exactfield/text.hpp"

namespace autkum {

/// x -> a x + b on the line over F_p(t), a != 0. Every such map fixes
/// x = infinity, the marked point P of C.
class AffineMap {
public:
    AffineMap(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b))
    {
        if (a_.is_zero()) throw Error(Errc::InvalidMap, "affine map with zero multiplier");
        if (a_.characteristic() != b_.characteristic()) throw Error(Errc::FieldMismatch, "a and b over different fields");
    }

    static AffineMap identity(u64 p) { return {RatFunc::constant(1, p), RatFunc::constant(0, p)}; }
    static AffineMap translation(RatFunc c) { return {c.make(1), std::move(c)}; }

    const RatFunc& a() const noexcept { return a_; }
    const RatFunc& b() const noexcept { return b_; }
    u64 characteristic() const noexcept { return a_.characteristic(); }

    bool is_identity() const noexcept { return a_.is_one() && b_.is_zero(); }
    bool is_translation() const noexcept { return a_.is_one(); }

    RatFunc operator()(const RatFunc& x) const { return a_ * x + b_; }

    /// (f o g)(x) = f(g(x)).
    friend AffineMap compose(const AffineMap& f, const AffineMap& g) { return {f.a_ * g.a_, f.a_ * g.b_ + f.b_}; }

    AffineMap inverse() const
    {
        RatFunc ai = a_.inverse();
        return {ai, -(ai * b_)};
    }

    AffineMap pow(i64 n) const
    {
        AffineMap base = n < 0 ? inverse() : *this;
        u64 e = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
        AffineMap acc = identity(characteristic());
        while (e) {
            if (e & 1) acc = compose(acc, base);
            base = compose(base, base);
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const AffineMap& f, const AffineMap& g) { return f.a_ == g.a_ && f.b_ == g.b_; }

private:
    RatFunc a_;
    RatFunc b_;
};

enum class AffineOp { Compose, Invert, Power };

inline AffineMap affine_group_ops(const AffineMap& f, const std::optional<AffineMap>& g, AffineOp op, i64 n = 0)
{
    switch (op) {
    case AffineOp::Compose:
        if (!g) throw Error(Errc::InvalidArgument, "compose needs two maps");
        return compose(f, *g);
    case AffineOp::Invert: return f.inverse();
    case AffineOp::Power: return f.pow(n);
    }
    throw Error(Errc::InternalError, "unknown affine op");
}

struct FixedPoint {
    std::optional<RatFunc> x; // nullopt is infinity
    RatFunc multiplier;
    bool parabolic = false;
};

/// Fixed points with their multipliers (derivative of the map at the point).
/// At infinity the chart u = 1/x turns the map into u -> u / (a + b u), with
/// derivative 1/a at u = 0. A non-identity translation has only infinity,
/// flagged parabolic.
inline std::vector<FixedPoint> fixed_points(const AffineMap& f)
{
    if (f.is_identity()) throw Error(Errc::IdentityMap, "every point is fixed by the identity");
    const RatFunc one = f.a().make(1);
    std::vector<FixedPoint> out;
    if (!f.is_translation()) out.push_back(FixedPoint{f.b() / (one - f.a()), f.a(), false});
    out.push_back(FixedPoint{std::nullopt, f.a().inverse(), f.is_translation()});
    return out;
}

inline std::string format_affine(const AffineMap& f)
{
    return "a=" + format_ratfunc(f.a()) + "; b=" + format_ratfunc(f.b());
}

inline AffineMap parse_affine(std::string_view text, u64 p)
{
    const std::string s = strip_spaces(text);
    const size_t semi = s.find(';');
    if (s.rfind("a=", 0) != 0 || semi == std::string::npos || s.compare(semi + 1, 2, "b=") != 0)
        throw Error(Errc::ParseError, "expected \"a=<ratfunc>; b=<ratfunc>\"");
    return {parse_ratfunc(s.substr(2, semi - 2), p), parse_ratfunc(s.substr(semi + 3), p)};
}

} // namespace autkum
