#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "autkum/curvelattice/config.hpp"

namespace autkum {

/// Center of a blow-up: a named point, a general point of one curve (away
/// from every named point on it), or a general point of the surface.
struct PointSpec {
    enum class Kind { Named, OnCurve, OnSurface } kind;
    std::string ref;

    static PointSpec named(std::string id) { return {Kind::Named, std::move(id)}; }
    static PointSpec on_curve(std::string label) { return {Kind::OnCurve, std::move(label)}; }
    static PointSpec on_surface() { return {Kind::OnSurface, {}}; }
};

/// Blow-up at a point where the curves through it meet pairwise transversally.
/// Appends the exceptional curve e (e.e = -1); every curve c through the point
/// loses 1 from c.c, gains c.e = 1, and pairs of such curves lose 1. The
/// canonical divisor becomes pi^*K + e with pi^*c = c' + e for c through the
/// point. Other named points stay on the proper transforms; the center is
/// replaced by the points e:c.
inline CurveConfig blow_up(const CurveConfig& cfg, const PointSpec& at, std::string label = {})
{
    CurveConfig::Data d = cfg.data();
    std::vector<std::string> through;
    std::string center;
    switch (at.kind) {
    case PointSpec::Kind::Named: {
        const NamedPoint& pt = cfg.point(at.ref);
        through = pt.curves;
        center = pt.id;
        d.points.erase(std::remove_if(d.points.begin(), d.points.end(), [&](const NamedPoint& q) { return q.id == pt.id; }),
                       d.points.end());
        break;
    }
    case PointSpec::Kind::OnCurve:
        if (!cfg.has_label(at.ref)) throw Error(Errc::NoSuchPoint, "no curve named " + at.ref);
        through = {cfg.resolve(at.ref)};
        center = "generic on " + through.front();
        break;
    case PointSpec::Kind::OnSurface:
        center = "generic";
        break;
    }

    if (label.empty()) {
        size_t k = cfg.blowups().size() + 1;
        do label = "X" + std::to_string(k++);
        while (cfg.has_label(label));
    } else if (cfg.has_label(label)) {
        throw Error(Errc::ConfigMismatch, "label " + label + " already in use");
    }

    const size_t n = cfg.size();
    std::vector<size_t> idx;
    for (const auto& c : through) idx.push_back(cfg.index(c));

    d.labels.push_back(label);
    for (auto& row : d.gram) row.push_back(0);
    d.gram.push_back(std::vector<i64>(n + 1, 0));
    d.gram[n][n] = -1;
    for (size_t a = 0; a < idx.size(); ++a) {
        d.gram[idx[a]][idx[a]] -= 1;
        d.gram[idx[a]][n] = d.gram[n][idx[a]] = 1;
        for (size_t b = a + 1; b < idx.size(); ++b) {
            d.gram[idx[a]][idx[b]] -= 1;
            d.gram[idx[b]][idx[a]] -= 1;
        }
    }

    i64 e_coeff = 1;
    for (size_t i : idx) e_coeff += d.canonical[i];
    d.canonical.push_back(e_coeff);

    for (const auto& c : through) d.points.push_back(NamedPoint{label + ":" + c, {label, c}, std::nullopt});
    // The center no longer exists as a point, so an alias to it would dangle.
    for (auto it = d.aliases.begin(); it != d.aliases.end();)
        it = (at.kind == PointSpec::Kind::Named && it->second == center) ? d.aliases.erase(it) : std::next(it);
    d.blowups.push_back(BlowupRecord{label, through, center});
    return CurveConfig(std::move(d));
}

/// pi^*D for the last blow-up taking `before` to `after`.
inline Divisor total_transform(const CurveConfig& before, const CurveConfig& after, const Divisor& D)
{
    before.require(D);
    if (after.blowups().size() != before.blowups().size() + 1 || after.size() != before.size() + 1 ||
        !std::equal(before.labels()->begin(), before.labels()->end(), after.labels()->begin()))
        throw Error(Errc::ConfigMismatch, "configurations are not one blow-up apart");
    std::vector<i64> c = D.coeffs();
    i64 e = 0;
    for (const auto& name : after.blowups().back().through) e += D[before.index(name)];
    c.push_back(e);
    return Divisor(after.labels(), std::move(c));
}

} // namespace autkum
