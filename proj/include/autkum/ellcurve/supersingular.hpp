#pragma once

#include <vector>

#include "autkum/ellcurve/legendre.hpp"
#include "autkum/exactfield/text.hpp"

namespace autkum {

/// Coefficient of x^{p-1} in (x(x-1)(x-lambda))^{(p-1)/2}, as a polynomial
/// in lambda over F_p. Its roots are the supersingular Legendre parameters.
inline Poly hasse_poly(u64 p)
{
    require_odd_prime(p);
    // Polynomials in x whose coefficients are polynomials in lambda.
    using XPoly = std::vector<Poly>;
    const Poly zero(p);
    const Poly lam = Poly::monomial(1, 1, p);
    const XPoly f{zero, lam, -(lam + Poly::constant(1, p)), Poly::constant(1, p)};

    auto mul = [&](const XPoly& a, const XPoly& b) {
        XPoly r(a.size() + b.size() - 1, zero);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        return r;
    };

    XPoly acc{Poly::constant(1, p)};
    for (u64 k = 0; k < (p - 1) / 2; ++k) acc = mul(acc, f);
    return acc.at(p - 1);
}

struct OrdinaryWitness {
    bool ordinary;
    RatFunc witness; // hasse_poly(p) evaluated at lambda = t
};

/// E: y^2 = x(x-1)(x-t) is ordinary because the Hasse polynomial is a
/// nonzero polynomial and t is transcendental.
inline OrdinaryWitness is_ordinary_generic(u64 p)
{
    RatFunc w = hasse_poly(p).eval_at(RatFunc::t(p));
    return OrdinaryWitness{!w.is_zero(), w};
}

/// Supersingular Legendre parameter in F_{p^2}: the first root of the Hasse
/// polynomial outside {0, 1}, scanning in element-index order (so F_p first).
inline ExtElem find_supersingular_lambda(u64 p)
{
    require_odd_prime(p);
    ExtField fq = ext_field_build(p, 2);
    const Poly h = hasse_poly(p);
    for (u64 idx = 2; idx < fq->q; ++idx) {
        ExtElem lam = ExtElem::element_at(fq, idx);
        if (h.eval_at(lam).is_zero()) return lam;
    }
    throw Error(Errc::InternalError, "no supersingular Legendre parameter in F_" + std::to_string(fq->q));
}

struct NonIsogenyCert {
    u64 p = 0;
    bool e_ordinary = false;
    RatFunc e_witness = RatFunc::constant(0, 3);
    ExtElem lambda0;
    bool lambda0_in_prime_field = false;
    u64 count_field_size = 0; // q of the field the point count was taken over
    u64 point_count = 0;
    i64 trace = 0; // q + 1 - point_count
    bool f_hasse_zero = false;
    bool f_supersingular = false; // trace divisible by p

    /// Exactly one curve of the pair (E ordinary, F supersingular) is supersingular.
    bool valid() const noexcept { return e_ordinary && f_hasse_zero && f_supersingular; }
};

/// Bundles the ordinariness of E with a supersingular F and its point-count witness.
inline NonIsogenyCert non_isogeny_certificate(u64 p)
{
    require_odd_prime(p);
    OrdinaryWitness ow = is_ordinary_generic(p);
    ExtElem lam = find_supersingular_lambda(p);
    NonIsogenyCert c{p, ow.ordinary, ow.witness, lam};
    c.lambda0_in_prime_field = lam.in_prime_field();
    c.f_hasse_zero = hasse_poly(p).eval_at(lam).is_zero();
    if (c.lambda0_in_prime_field) {
        c.count_field_size = p;
        c.point_count = point_count(LegendreCurve<Fp>(Fp(static_cast<i64>(lam.coords()[0]), p)));
    } else {
        c.count_field_size = lam.field()->q;
        c.point_count = point_count(LegendreCurve<ExtElem>(lam));
    }
    c.trace = static_cast<i64>(c.count_field_size) + 1 - static_cast<i64>(c.point_count);
    c.f_supersingular = c.trace % static_cast<i64>(p) == 0;
    return c;
}

} // namespace autkum
