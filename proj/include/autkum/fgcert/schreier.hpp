#pragma once

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "autkum/lineaction/word.hpp"

namespace autkum {

/// Image table of a permutation of {0, ..., m-1}.
using Permutation = std::vector<size_t>;

/// Ordered generator list; the order is the tie-break order everywhere.
using PermGenerators = std::vector<std::pair<std::string, Permutation>>;

inline Permutation perm_inverse(const Permutation& g)
{
    Permutation r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[g[i]] = i;
    return r;
}

/// Right action x^w: letters are applied left to right.
inline size_t act(size_t x, const GroupWord& w, const PermGenerators& gens)
{
    for (const auto& [name, e] : w.letters()) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return g.first == name; });
        if (it == gens.end()) throw Error(Errc::UnknownGenerator, "generator " + name + " is not bound");
        const Permutation& g = it->second;
        const Permutation inv = e < 0 ? perm_inverse(g) : Permutation{};
        const Permutation& step = e < 0 ? inv : g;
        for (i64 k = 0; k < (e < 0 ? -e : e); ++k) x = step.at(x);
    }
    return x;
}

/// Permutation x -> x^w.
inline Permutation word_permutation(const GroupWord& w, const PermGenerators& gens, size_t degree)
{
    Permutation r(degree);
    for (size_t x = 0; x < degree; ++x) r[x] = act(x, w, gens);
    return r;
}

struct SchreierData {
    std::vector<size_t> orbit;              // BFS order; orbit.front() is the base
    std::map<size_t, GroupWord> transversal; // coset point -> representative word
    std::vector<GroupWord> generators;       // nontrivial Schreier generators
};

/// Reidemeister-Schreier for the stabilizer of `base` in the group generated
/// by `gens`: a breadth-first Schreier transversal (prefix closed, generators
/// tried in list order), then u = r g (rep(base^{r g}))^{-1} for every coset
/// representative r and generator g, freely reduced, trivial words dropped,
/// duplicates kept once.
inline SchreierData schreier_data(const PermGenerators& gens, size_t base)
{
    if (gens.empty()) throw Error(Errc::EmptyInput, "no generators");
    const size_t m = gens.front().second.size();
    for (const auto& [name, g] : gens) {
        if (g.size() != m) throw Error(Errc::InvalidArgument, "generators act on different point sets");
        std::vector<bool> hit(m, false);
        for (size_t x : g) {
            if (x >= m || hit[x]) throw Error(Errc::InvalidArgument, "generator " + name + " is not a permutation");
            hit[x] = true;
        }
    }
    if (base >= m) throw Error(Errc::InvalidArgument, "base point outside the permutation domain");

    SchreierData d;
    d.transversal.emplace(base, GroupWord{});
    std::deque<size_t> queue{base};
    while (!queue.empty()) {
        const size_t x = queue.front();
        queue.pop_front();
        d.orbit.push_back(x);
        for (const auto& [name, g] : gens) {
            const size_t y = g[x];
            if (d.transversal.count(y)) continue;
            d.transversal.emplace(y, d.transversal.at(x) * GroupWord::gen(name));
            queue.push_back(y);
        }
    }

    std::set<GroupWord> seen;
    for (size_t x : d.orbit) {
        const GroupWord& r = d.transversal.at(x);
        for (const auto& [name, g] : gens) {
            GroupWord u = r * GroupWord::gen(name) * d.transversal.at(g[x]).inverse();
            if (u.empty() || !seen.insert(u).second) continue;
            d.generators.push_back(std::move(u));
        }
    }
    return d;
}

inline std::vector<GroupWord> schreier_generators(const PermGenerators& gens, size_t base)
{
    return schreier_data(gens, base).generators;
}

/// Rank of a finite-index subgroup of a free group: 1 + n (r - 1).
inline i64 nielsen_schreier_expected(i64 rank, i64 index)
{
    if (rank < 1 || index < 1) throw Error(Errc::InvalidArgument, "rank and index must be positive");
    return 1 + index * (rank - 1);
}

/// "a=(0 1); b=(0 1 2)(3 4)"; "a=()" is the identity. The degree is one past
/// the largest point mentioned (or `min_degree`, if larger).
inline PermGenerators parse_cycle_generators(std::string_view text, size_t min_degree = 0)
{
    std::vector<std::pair<std::string, std::vector<std::vector<size_t>>>> raw;
    size_t degree = min_degree;
    std::string s(text);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        pos = end + 1;
        const size_t first = item.find_first_not_of(" \t\n");
        if (first == std::string::npos) continue;
        item = item.substr(first, item.find_last_not_of(" \t\n") - first + 1);
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(Errc::ParseError, "expected name=(cycles) in \"" + item + "\"");
        std::string name = item.substr(0, eq);
        name.erase(name.find_last_not_of(" \t") + 1);
        std::vector<std::vector<size_t>> cycles;
        const std::string spaced = item.substr(eq + 1);
        size_t i = 0;
        while (i < spaced.size()) {
            if (std::isspace(static_cast<unsigned char>(spaced[i]))) {
                ++i;
                continue;
            }
            if (spaced[i] != '(') throw Error(Errc::ParseError, "expected '(' in \"" + item + "\"");
            const size_t close = spaced.find(')', i);
            if (close == std::string::npos) throw Error(Errc::ParseError, "unclosed cycle in \"" + item + "\"");
            std::istringstream in(spaced.substr(i + 1, close - i - 1));
            std::vector<size_t> cyc;
            std::string tok;
            while (in >> tok) {
                size_t used = 0;
                size_t v = 0;
                try {
                    v = std::stoul(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size() || tok.empty()) throw Error(Errc::ParseError, "bad point \"" + tok + "\"");
                cyc.push_back(v);
                degree = std::max(degree, v + 1);
            }
            cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        raw.emplace_back(std::move(name), std::move(cycles));
    }
    if (raw.empty()) throw Error(Errc::EmptyInput, "no generators");

    PermGenerators gens;
    for (auto& [name, cycles] : raw) {
        Permutation g(degree);
        for (size_t x = 0; x < degree; ++x) g[x] = x;
        std::vector<bool> moved(degree, false);
        for (const auto& cyc : cycles) {
            for (size_t k = 0; k < cyc.size(); ++k) {
                if (moved[cyc[k]]) throw Error(Errc::ParseError, "point repeated in generator " + name);
                moved[cyc[k]] = true;
                g[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
        }
        gens.emplace_back(name, std::move(g));
    }
    return gens;
}

} // namespace autkum
