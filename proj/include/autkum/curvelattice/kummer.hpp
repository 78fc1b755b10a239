#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "autkum/curvelattice/config.hpp"
#include "autkum/ellcurve/legendre.hpp"

namespace autkum {

inline std::string node_label(int i, int j) { return "C" + std::to_string(i) + std::to_string(j); }

/// The 24 visible curves of Km(E x F): E1..E4 over the 2-torsion of F,
/// F1..F4 over the 2-torsion of E, and C_ij over the node (b_i, a_j).
/// C_ij meets F_i and E_j once; everything else is disjoint. C is E1 and
/// its points with C11, C21, C31, C41 have x = inf, 0, 1, t. P = C:C11.
inline CurveConfig kummer_config()
{
    CurveConfig::Data d;
    for (int j = 1; j <= 4; ++j) d.labels.push_back("E" + std::to_string(j));
    for (int i = 1; i <= 4; ++i) d.labels.push_back("F" + std::to_string(i));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) d.labels.push_back(node_label(i, j));

    const size_t n = d.labels.size();
    d.gram.assign(n, std::vector<i64>(n, 0));
    for (size_t k = 0; k < n; ++k) d.gram[k][k] = -2;
    auto at = [&](const std::string& s) {
        return static_cast<size_t>(std::find(d.labels.begin(), d.labels.end(), s) - d.labels.begin());
    };

    const char* c_coords[] = {"inf", "0", "1", "t"};
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const std::string c = node_label(i, j), e = "E" + std::to_string(j), f = "F" + std::to_string(i);
            d.gram[at(c)][at(e)] = d.gram[at(e)][at(c)] = 1;
            d.gram[at(c)][at(f)] = d.gram[at(f)][at(c)] = 1;
            NamedPoint pe{e + ":" + c, {e, c}, std::nullopt};
            if (j == 1) pe.coord = c_coords[i - 1];
            d.points.push_back(pe);
            d.points.push_back(NamedPoint{f + ":" + c, {f, c}, std::nullopt});
            d.origins[c] = CurveOrigin{CurveOrigin::Kind::Node, i - 1, j - 1};
        }
        d.origins["F" + std::to_string(i)] = CurveOrigin{CurveOrigin::Kind::FCurve, i - 1, -1};
        d.origins["E" + std::to_string(i)] = CurveOrigin{CurveOrigin::Kind::ECurve, -1, i - 1};
    }
    d.canonical.assign(n, 0);
    for (int k = 1; k <= 4; ++k) d.fixed_locus.push_back("E" + std::to_string(k));
    for (int k = 1; k <= 4; ++k) d.fixed_locus.push_back("F" + std::to_string(k));
    d.aliases["C"] = "E1";
    d.aliases["P"] = "E1:C11";
    return CurveConfig(std::move(d));
}

/// I_8 cycle C + C11 + F1 + C12 + E2 + C22 + F2 + C21.
inline Divisor kummer_d1(const CurveConfig& cfg)
{
    return cfg.divisor({{"C", 1}, {"C11", 1}, {"F1", 1}, {"C12", 1}, {"E2", 1}, {"C22", 1}, {"F2", 1}, {"C21", 1}});
}

/// IV* star C + 2C11 + E2 + 2C12 + E3 + 2C13 + 3F1.
inline Divisor kummer_d2(const CurveConfig& cfg)
{
    return cfg.divisor({{"C", 1}, {"C11", 2}, {"E2", 1}, {"C12", 2}, {"E3", 1}, {"C13", 2}, {"F1", 3}});
}

/// Action of theta = [(1_E, -1_F)] on the curve labels, as a permutation
/// (image index per label). Computed from the curve origins: theta fixes the
/// E-coordinate and negates the F-coordinate, and negation permutes the
/// 2-torsion of F as computed on a Legendre model.
inline std::vector<size_t> theta_class_action(const CurveConfig& cfg)
{
    if (cfg.origins().size() != cfg.size() || !cfg.blowups().empty())
        throw Error(Errc::UnsupportedSurface, "theta action needs the unblown Kummer configuration");

    // F for p = 3: y^2 = x(x-1)(x-2), whose 2-torsion labels a_1..a_4.
    const LegendreCurve<Fp> f_model(Fp(2, 3));
    const auto tors = f_model.two_torsion();
    auto negated_index = [&](int j) {
        auto img = f_model.neg(tors.at(static_cast<size_t>(j)));
        for (size_t k = 0; k < tors.size(); ++k)
            if (tors[k] == img) return static_cast<int>(k);
        throw Error(Errc::InternalError, "2-torsion not closed under negation");
    };

    std::vector<size_t> perm(cfg.size());
    for (size_t k = 0; k < cfg.size(); ++k) {
        CurveOrigin o = cfg.origins().at((*cfg.labels())[k]);
        if (o.f_torsion >= 0) o.f_torsion = negated_index(o.f_torsion);
        size_t image = cfg.size();
        for (size_t m = 0; m < cfg.size(); ++m) {
            const CurveOrigin& q = cfg.origins().at((*cfg.labels())[m]);
            if (q.kind == o.kind && q.e_torsion == o.e_torsion && q.f_torsion == o.f_torsion) image = m;
        }
        if (image == cfg.size()) throw Error(Errc::InternalError, "theta image is not a visible curve");
        perm[k] = image;
    }
    return perm;
}

/// Order of a permutation given as an image table.
inline u64 permutation_order(const std::vector<size_t>& perm)
{
    u64 order = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        u64 len = 0;
        for (size_t x = s; !seen[x]; x = perm[x]) {
            seen[x] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

/// The unique component of the fixed locus B through the given point.
inline std::string unique_fixed_component_through(const CurveConfig& cfg, const std::string& point_id)
{
    const NamedPoint& pt = cfg.point(point_id);
    std::vector<std::string> hits;
    for (const auto& c : pt.curves)
        if (std::find(cfg.fixed_locus().begin(), cfg.fixed_locus().end(), c) != cfg.fixed_locus().end()) hits.push_back(c);
    if (hits.size() != 1)
        throw Error(Errc::NotUnique, std::to_string(hits.size()) + " fixed-locus components pass through " + pt.id);
    return hits.front();
}

} // namespace autkum
