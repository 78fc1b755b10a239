#pragma once

#include <sstream>
#include <string>

#include "autkum/ellcurve/legendre.hpp"
#include "autkum/exactfield/text.hpp"

// Curve descriptors: "legendre p=<p> lambda=<ratfunc-or-residue>".
// Points: "O" or "(x,y)" with coordinates in the F_p(t) grammar.

namespace autkum {

struct CurveDescriptor {
    u64 p;
    RatFunc lambda;

    /// lambda is a constant, so the curve is defined over F_p.
    bool over_prime_field() const { return lambda.den().degree() == 0 && lambda.num().degree() <= 0; }

    LegendreCurve<RatFunc> over_function_field() const { return LegendreCurve<RatFunc>(lambda); }
    LegendreCurve<Fp> over_fp() const
    {
        if (!over_prime_field()) throw Error(Errc::InvalidArgument, "lambda is not a residue");
        return LegendreCurve<Fp>(Fp(static_cast<i64>(lambda.num().coeff(0)), p));
    }
};

inline CurveDescriptor parse_curve_descriptor(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string kind, pfield, lfield;
    in >> kind >> pfield;
    std::getline(in, lfield);
    lfield = strip_spaces(lfield);
    if (kind != "legendre" || pfield.rfind("p=", 0) != 0 || lfield.rfind("lambda=", 0) != 0)
        throw Error(Errc::ParseError, "expected \"legendre p=<p> lambda=<value>\"");
    u64 p = 0;
    try {
        p = std::stoull(pfield.substr(2));
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad prime in \"" + pfield + "\"");
    }
    require_odd_prime(p);
    return CurveDescriptor{p, parse_ratfunc(lfield.substr(7), p)};
}

inline std::string format_curve_descriptor(const CurveDescriptor& d)
{
    return "legendre p=" + std::to_string(d.p) + " lambda=" + format_ratfunc(d.lambda);
}

inline CurvePoint<RatFunc> parse_point(std::string_view text, u64 p)
{
    std::string s = strip_spaces(text);
    if (s == "O") return CurvePoint<RatFunc>::infinity();
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw Error(Errc::ParseError, "expected \"O\" or \"(x,y)\"");
    s = s.substr(1, s.size() - 2);
    // The comma separating x and y is the only one outside parentheses.
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) split = i;
    }
    if (split == std::string::npos) throw Error(Errc::ParseError, "missing ',' in point");
    return CurvePoint<RatFunc>::affine(parse_ratfunc(s.substr(0, split), p), parse_ratfunc(s.substr(split + 1), p));
}

inline std::string format_point(const CurvePoint<RatFunc>& P)
{
    if (P.is_infinity()) return "O";
    return "(" + format_ratfunc(P.x()) + "," + format_ratfunc(P.y()) + ")";
}

} // namespace autkum
