#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "autkum/lineaction/affine.hpp"

namespace autkum {

/// Freely reduced word in named generators: nonzero exponents, adjacent
/// letters with distinct generators.
class GroupWord {
public:
    using Letter = std::pair<std::string, i64>;

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters)
    {
        for (auto& l : letters) push(std::move(l));
    }
    static GroupWord gen(std::string g, i64 e = 1) { return GroupWord({{std::move(g), e}}); }

    const std::vector<Letter>& letters() const noexcept { return w_; }
    bool empty() const noexcept { return w_.empty(); }
    size_t length() const noexcept
    {
        size_t n = 0;
        for (const auto& [g, e] : w_) n += static_cast<size_t>(e < 0 ? -e : e);
        return n;
    }

    GroupWord inverse() const
    {
        GroupWord r;
        for (auto it = w_.rbegin(); it != w_.rend(); ++it) r.w_.push_back({it->first, -it->second});
        return r;
    }

    friend GroupWord operator*(GroupWord a, const GroupWord& b)
    {
        for (const auto& l : b.w_) a.push(l);
        return a;
    }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend bool operator<(const GroupWord& a, const GroupWord& b) { return a.w_ < b.w_; }

    /// "f1^3 f2 f1^-3"; the empty word prints as "1".
    std::string to_string() const
    {
        if (w_.empty()) return "1";
        std::string out;
        for (const auto& [g, e] : w_) {
            if (!out.empty()) out += ' ';
            out += g;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    void push(Letter l)
    {
        if (l.second == 0) return;
        if (!w_.empty() && w_.back().first == l.first) {
            w_.back().second += l.second;
            if (w_.back().second == 0) w_.pop_back();
            return;
        }
        w_.push_back(std::move(l));
    }

    std::vector<Letter> w_;
};

/// Whitespace-separated tokens "g" or "g^e"; "1" or an empty string is the empty word.
inline GroupWord parse_word(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<GroupWord::Letter> letters;
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        const size_t caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (name.empty()) throw Error(Errc::ParseError, "missing generator in \"" + tok + "\"");
        i64 e = 1;
        if (caret != std::string::npos) {
            try {
                size_t used = 0;
                e = std::stoll(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error(Errc::ParseError, "bad exponent in \"" + tok + "\"");
            }
        }
        letters.emplace_back(std::move(name), e);
    }
    return GroupWord(std::move(letters));
}

/// Product of the letters as composition, left factor outermost:
/// g1^e1 g2^e2 ... evaluates to g1^e1 o g2^e2 o ...
inline AffineMap evaluate_word(const GroupWord& w, const std::map<std::string, AffineMap>& dict, u64 p)
{
    AffineMap acc = AffineMap::identity(p);
    for (const auto& [g, e] : w.letters()) {
        auto it = dict.find(g);
        if (it == dict.end()) throw Error(Errc::UnknownGenerator, "generator " + g + " is not bound");
        acc = compose(acc, it->second.pow(e));
    }
    return acc;
}

/// f1 = (x -> t x) and f2 = (x -> x + 1), the actions on C.
inline std::map<std::string, AffineMap> mw_generators(u64 p)
{
    return {{"f1", AffineMap(RatFunc::t(p), RatFunc::constant(0, p))},
            {"f2", AffineMap::translation(RatFunc::constant(1, p))}};
}

/// f1^n f2 f1^-n evaluated on C; the result is the translation by t^n.
inline AffineMap conjugate_generator(i64 n, u64 p)
{
    require_odd_prime(p);
    GroupWord w({{"f1", n}, {"f2", 1}, {"f1", -n}});
    return evaluate_word(w, mw_generators(p), p);
}

} // namespace autkum
