#pragma once

#include <variant>

#include "autkum/exactfield/field.hpp"

namespace autkum {

/// Eigenvalues of df_P on the tangent directions v1 (along C) and v2 (along C11).
template <FieldElement F>
struct DifferentialPair {
    F alpha1;
    F alpha2;

    DifferentialPair(F a1, F a2) : alpha1(std::move(a1)), alpha2(std::move(a2))
    {
        if (alpha1.is_zero() || alpha2.is_zero()) throw Error(Errc::InvalidArgument, "differential eigenvalues must be nonzero");
    }
};

/// Scalar by which f acts on the 2-form: alpha = alpha1 * alpha2.
template <FieldElement F>
F canonical_rep(const DifferentialPair<F>& d)
{
    return d.alpha1 * d.alpha2;
}

/// Kernel of f -> d(f|_C)_P.
template <FieldElement F>
bool in_G_XCP(const DifferentialPair<F>& d)
{
    return d.alpha1 == d.alpha1.make(1);
}

/// Kernel of f -> df_P.
template <FieldElement F>
bool in_G_XP(const DifferentialPair<F>& d)
{
    return in_G_XCP(d) && d.alpha2 == d.alpha2.make(1);
}

/// f lifts to the second blow-up iff df_P is scalar.
template <FieldElement F>
bool lifts_to_Y(const DifferentialPair<F>& d)
{
    return d.alpha1 == d.alpha2;
}

enum class PairQuery { CanonicalRep, InGXCP, InGXP, LiftsToY };

template <FieldElement F>
std::variant<F, bool> pair_calculus(const DifferentialPair<F>& d, PairQuery q)
{
    switch (q) {
    case PairQuery::CanonicalRep: return canonical_rep(d);
    case PairQuery::InGXCP: return in_G_XCP(d);
    case PairQuery::InGXP: return in_G_XP(d);
    case PairQuery::LiftsToY: return lifts_to_Y(d);
    }
    throw Error(Errc::InternalError, "unknown pair query");
}

} // namespace autkum
