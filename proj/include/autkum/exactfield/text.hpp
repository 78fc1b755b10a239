#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "autkum/exactfield/laurent.hpp"

// Text grammar for elements of F_p(t):
//   sum   := term ("+" term)*
//   term  := coeff | [coeff "*"] "t" ["^" int]
//   ratfunc := sum | "(" sum ")/(" sum ")"
// Coefficients are decimal residues, exponents any integer. Whitespace is ignored.

namespace autkum {

inline std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

namespace detail {

struct LaurentParser {
    std::string_view s;
    size_t pos = 0;
    u64 p;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }

    bool at_end() const { return pos >= s.size(); }
    bool peek(char c) const { return pos < s.size() && s[pos] == c; }

    u64 parse_unsigned_mod()
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digits");
        u64 v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = (v * 10 + static_cast<u64>(s[pos++] - '0')) % p;
        return v;
    }

    i64 parse_int()
    {
        bool neg = false;
        if (peek('-') || peek('+')) neg = s[pos++] == '-';
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
        i64 v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > (i64{1} << 40)) fail("exponent too large");
        }
        return neg ? -v : v;
    }

    RatFunc parse_term()
    {
        u64 c = 1;
        bool has_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = parse_unsigned_mod();
            has_coeff = true;
            if (!peek('*')) return RatFunc::constant(static_cast<i64>(c), p);
            ++pos;
        }
        if (!peek('t')) fail(has_coeff ? "expected 't' after '*'" : "expected term");
        ++pos;
        i64 e = 1;
        if (peek('^')) {
            ++pos;
            e = parse_int();
        }
        return RatFunc::monomial(e, static_cast<i64>(c), p);
    }

    RatFunc parse_sum()
    {
        RatFunc acc = parse_term();
        while (peek('+')) {
            ++pos;
            acc = acc + parse_term();
        }
        return acc;
    }

    RatFunc parse_ratfunc()
    {
        if (peek('(')) {
            ++pos;
            RatFunc num = parse_sum();
            if (!peek(')')) fail("expected ')'");
            ++pos;
            if (at_end()) return num;
            if (!peek('/')) fail("expected '/'");
            ++pos;
            if (!peek('(')) fail("expected '('");
            ++pos;
            RatFunc den = parse_sum();
            if (!peek(')')) fail("expected ')'");
            ++pos;
            if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in \"" + std::string(s) + "\"");
            return num / den;
        }
        return parse_sum();
    }
};

inline std::string term_text(u64 c, i64 e)
{
    if (e == 0) return std::to_string(c);
    std::string mono = e == 1 ? "t" : "t^" + std::to_string(e);
    return c == 1 ? mono : std::to_string(c) + "*" + mono;
}

} // namespace detail

inline RatFunc parse_ratfunc(std::string_view text, u64 p)
{
    std::string s = strip_spaces(text);
    if (s.empty()) throw Error(Errc::ParseError, "empty expression");
    detail::LaurentParser ps{s, 0, p};
    RatFunc r = ps.parse_ratfunc();
    if (!ps.at_end()) ps.fail("unexpected character");
    return r;
}

inline LaurentVector parse_laurent(std::string_view text, u64 p) { return laurent_coeffs(parse_ratfunc(text, p)); }

/// Comma-separated Laurent polynomials; an empty or blank string is the empty set.
inline std::vector<LaurentVector> parse_laurent_list(std::string_view text, u64 p)
{
    std::vector<LaurentVector> out;
    std::string s = strip_spaces(text);
    size_t start = 0;
    while (start < s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_laurent(std::string_view(s).substr(start, comma - start), p));
        start = comma + 1;
    }
    return out;
}

inline std::string format_laurent(const LaurentVector& v)
{
    std::string out;
    for (i64 e = v.lo; e <= v.hi; ++e) {
        u64 c = v.coeff(e);
        if (!c) continue;
        if (!out.empty()) out += " + ";
        out += detail::term_text(c, e);
    }
    return out.empty() ? "0" : out;
}

inline std::string format_poly(const Poly& f)
{
    LaurentVector v{0, f.degree() < 0 ? 0 : f.degree(), f.is_zero() ? std::vector<u64>{0} : f.coeffs(), f.modulus()};
    return format_laurent(v);
}

/// Canonical text: Laurent form when possible, "(num)/(den)" otherwise.
inline std::string format_ratfunc(const RatFunc& r)
{
    if (r.is_laurent()) return format_laurent(laurent_coeffs(r));
    return "(" + format_poly(r.num()) + ")/(" + format_poly(r.den()) + ")";
}

} // namespace autkum
