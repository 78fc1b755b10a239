#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "autkum/curvelattice/config.hpp"

namespace autkum {

struct KodairaType {
    enum class Kind { In, InStar, IVStar, IIIStar, IIStar, NotAFiber } kind = Kind::NotAFiber;
    int n = 0; // number of components for I_n, m for I*_m

    std::string to_string() const
    {
        switch (kind) {
        case Kind::In: return "I_" + std::to_string(n);
        case Kind::InStar: return "I*_" + std::to_string(n);
        case Kind::IVStar: return "IV*";
        case Kind::IIIStar: return "III*";
        case Kind::IIStar: return "II*";
        case Kind::NotAFiber: return "NotAFiber";
        }
        return "?";
    }

    friend bool operator==(const KodairaType&, const KodairaType&) = default;

    static KodairaType not_a_fiber() { return {}; }
};

namespace detail {

/// Arm lengths (in vertices) hanging off `center` in a tree.
inline std::vector<size_t> arm_lengths(const std::vector<std::vector<size_t>>& adj, size_t center)
{
    std::vector<size_t> arms;
    for (size_t start : adj[center]) {
        size_t prev = center, cur = start, len = 1;
        while (adj[cur].size() == 2) {
            size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        if (adj[cur].size() > 2) return {}; // reached another branch node
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

} // namespace detail

/// Kodaira type of a divisor supported on -2 curves, read off from the
/// multiplicities and the dual graph of the support. Returns NotAFiber unless
/// D.C_i = 0 on every component, the support is connected and the
/// multiplicities have gcd 1. The reduced small types I_1, I_2, II, III, IV
/// need non-transverse configurations and are reported as NotAFiber.
inline KodairaType classify_fiber(const CurveConfig& cfg, const Divisor& D)
{
    cfg.require(D);
    for (i64 c : D.coeffs())
        if (c < 0) throw Error(Errc::InvalidDivisor, "fiber candidates must be effective");

    const std::vector<size_t> supp = D.support();
    if (supp.empty()) return KodairaType::not_a_fiber();
    for (size_t i : supp) {
        if (cfg.gram(i, i) != -2) return KodairaType::not_a_fiber();
        i64 dot = 0;
        for (size_t j : supp) dot += D[j] * cfg.gram(i, j);
        if (dot != 0) return KodairaType::not_a_fiber();
    }
    i64 g = 0;
    for (size_t i : supp) g = std::gcd(g, D[i]);
    if (g != 1) return KodairaType::not_a_fiber();

    const size_t n = supp.size();
    std::vector<std::vector<size_t>> adj(n);
    size_t edges = 0;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            const i64 m = cfg.gram(supp[a], supp[b]);
            if (m > 1) return KodairaType::not_a_fiber();
            if (m == 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++edges;
            }
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) return KodairaType::not_a_fiber();

    i64 max_mult = 0;
    for (size_t i : supp) max_mult = std::max(max_mult, D[i]);
    auto expect = [&](KodairaType t, i64 mult) { return max_mult == mult ? t : KodairaType::not_a_fiber(); };

    if (edges == n) {
        const bool cycle = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
        if (cycle && n >= 3) return expect({KodairaType::Kind::In, static_cast<int>(n)}, 1);
        return KodairaType::not_a_fiber();
    }
    if (edges != n - 1) return KodairaType::not_a_fiber();

    std::vector<size_t> branch;
    for (size_t v = 0; v < n; ++v)
        if (adj[v].size() > 2) branch.push_back(v);

    if (branch.size() == 1) {
        const size_t deg = adj[branch[0]].size();
        if (deg == 4 && n == 5) return expect({KodairaType::Kind::InStar, 0}, 2);
        if (deg != 3) return KodairaType::not_a_fiber();
        const auto arms = detail::arm_lengths(adj, branch[0]);
        if (arms == std::vector<size_t>{2, 2, 2}) return expect({KodairaType::Kind::IVStar, 0}, 3);
        if (arms == std::vector<size_t>{1, 3, 3}) return expect({KodairaType::Kind::IIIStar, 0}, 4);
        if (arms == std::vector<size_t>{1, 2, 5}) return expect({KodairaType::Kind::IIStar, 0}, 6);
        return KodairaType::not_a_fiber();
    }
    if (branch.size() == 2 && n >= 6) {
        for (size_t b : branch) {
            if (adj[b].size() != 3) return KodairaType::not_a_fiber();
            size_t leaves = 0;
            for (size_t w : adj[b]) leaves += adj[w].size() == 1;
            if (leaves != 2) return KodairaType::not_a_fiber();
        }
        return expect({KodairaType::Kind::InStar, static_cast<int>(n) - 5}, 2);
    }
    return KodairaType::not_a_fiber();
}

/// s is a section of the fibration with this fiber: s.F = 1, s.s = -2 and s
/// is not a fiber component. Throws NotAFiber if `fiber` is not a fiber.
inline bool check_section(const CurveConfig& cfg, const Divisor& fiber, const std::string& s)
{
    if (classify_fiber(cfg, fiber).kind == KodairaType::Kind::NotAFiber)
        throw Error(Errc::NotAFiber, "section check against a non-fiber divisor");
    const size_t k = cfg.index(s);
    if (fiber[k] != 0) return false;
    return cfg.gram(k, k) == -2 && intersect(cfg, fiber, cfg.curve(s)) == 1;
}

/// Riemann-Roch on the K3 configuration: chi(L) = 2 + L.L/2.
inline i64 rr_chi(const CurveConfig& cfg, const Divisor& D)
{
    if (!cfg.blowups().empty() || !cfg.canonical().is_zero())
        throw Error(Errc::UnsupportedSurface, "Riemann-Roch is only provided for the K3 configuration");
    const i64 dd = intersect(cfg, D, D);
    if (dd % 2 != 0) throw Error(Errc::LatticeParityError, "odd self-intersection on a K3 configuration");
    return 2 + dd / 2;
}

} // namespace autkum
