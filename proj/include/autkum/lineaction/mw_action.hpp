#pragma once

#include <string>
#include <vector>

#include "autkum/curvelattice/kodaira.hpp"
#include "autkum/curvelattice/kummer.hpp"
#include "autkum/lineaction/affine.hpp"

namespace autkum {

struct SectionCheck {
    std::string label;
    i64 fiber_dot = 0;
    bool ok = false;
};

/// Lattice-level evidence for an elliptic fibration: the fiber's Kodaira
/// type and section checks for the zero section and one more section.
struct FibrationRecord {
    Divisor fiber;
    KodairaType type;
    std::string zero_section;
    std::vector<SectionCheck> sections;

    bool verified() const
    {
        if (type.kind == KodairaType::Kind::NotAFiber || sections.empty()) return false;
        for (const auto& s : sections)
            if (!s.ok) return false;
        return true;
    }

    const SectionCheck* find(const std::string& label) const
    {
        for (const auto& s : sections)
            if (s.label == label) return &s;
        return nullptr;
    }
};

/// Runs classify_fiber and check_section; a non-fiber yields a record with
/// failed checks rather than an exception.
inline FibrationRecord certify_fibration(const CurveConfig& cfg, const Divisor& fiber, const std::string& zero,
                                         const std::vector<std::string>& others)
{
    FibrationRecord r{fiber, classify_fiber(cfg, fiber), cfg.resolve(zero), {}};
    std::vector<std::string> all{cfg.resolve(zero)};
    for (const auto& o : others) all.push_back(cfg.resolve(o));
    for (const auto& s : all) {
        SectionCheck sc{s, intersect(cfg, fiber, cfg.curve(s)), false};
        if (r.type.kind != KodairaType::Kind::NotAFiber) sc.ok = check_section(cfg, fiber, s);
        r.sections.push_back(sc);
    }
    return r;
}

/// Action on C (coordinate x) of the Mordell-Weil translation by `section`.
/// Table entries, consulted only for a verified record:
///   I_8 fiber D1, zero C31: C41 -> x -> t x
///   IV* fiber D2, zero C21: C31 -> x -> x + 1
/// The zero section acts trivially.
inline AffineMap mw_action(const CurveConfig& cfg, const FibrationRecord& fib, const std::string& section, u64 p)
{
    require_odd_prime(p);
    if (!fib.verified()) throw Error(Errc::UnverifiedFibration, "fiber or section certificates failed");
    const std::string s = cfg.resolve(section);
    if (!fib.find(s)) throw Error(Errc::UnverifiedFibration, "no section certificate for " + s);
    if (s == fib.zero_section) return AffineMap::identity(p);

    using K = KodairaType::Kind;
    if (fib.type == KodairaType{K::In, 8} && fib.fiber == kummer_d1(cfg) && fib.zero_section == "C31" && s == "C41")
        return AffineMap(RatFunc::t(p), RatFunc::constant(0, p));
    if (fib.type.kind == K::IVStar && fib.fiber == kummer_d2(cfg) && fib.zero_section == "C21" && s == "C31")
        return AffineMap::translation(RatFunc::constant(1, p));
    throw Error(Errc::UnknownAction, "no recorded action for section " + s + " of a " + fib.type.to_string() + " fibration");
}

} // namespace autkum
