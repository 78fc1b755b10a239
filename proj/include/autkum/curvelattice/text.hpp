#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "autkum/curvelattice/config.hpp"
#include "autkum/exactfield/text.hpp"

// Divisor grammar: term ("+" term)*, term := [int "*"] label.
// Example: "C + 2*C11 + E2 + 2*C12 + E3 + 2*C13 + 3*F1".

namespace autkum {

inline Divisor parse_divisor(const CurveConfig& cfg, std::string_view text)
{
    const std::string s = strip_spaces(text);
    if (s.empty()) throw Error(Errc::ParseError, "empty divisor");
    std::vector<i64> c(cfg.size(), 0);
    size_t pos = 0;
    while (true) {
        const size_t end = s.find('+', pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        i64 k = 1;
        const size_t star = term.find('*');
        if (star != std::string::npos) {
            try {
                size_t used = 0;
                k = std::stoll(term.substr(0, star), &used);
                if (used != star) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error(Errc::ParseError, "bad coefficient in \"" + term + "\"");
            }
            term = term.substr(star + 1);
        }
        if (term.empty() || !cfg.has_label(term)) throw Error(Errc::ParseError, "unknown curve \"" + term + "\"");
        c[cfg.index(term)] += k;
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return Divisor(cfg.labels(), std::move(c));
}

inline std::string format_divisor(const Divisor& D)
{
    std::string out;
    for (size_t i : D.support()) {
        if (!out.empty()) out += " + ";
        if (D[i] != 1) out += std::to_string(D[i]) + "*";
        out += (*D.labels())[i];
    }
    return out.empty() ? "0" : out;
}

/// Gram matrix as CSV with a label header row and column.
inline std::string gram_csv(const CurveConfig& cfg)
{
    std::ostringstream os;
    for (const auto& l : *cfg.labels()) os << ',' << l;
    os << '\n';
    for (size_t i = 0; i < cfg.size(); ++i) {
        os << (*cfg.labels())[i];
        for (size_t j = 0; j < cfg.size(); ++j) os << ',' << cfg.gram(i, j);
        os << '\n';
    }
    return os.str();
}

} // namespace autkum
