#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "autkum/ellcurve/legendre.hpp"
#include "autkum/ellcurve/supersingular.hpp"
#include "autkum/ellcurve/text.hpp"
#include "group_table.hpp"

using namespace autkum;

namespace {

// (-1)^m sum_i C(m,i)^2 lambda^i with m = (p-1)/2, computed independently.
Poly deuring(u64 p)
{
    const u64 m = (p - 1) / 2;
    std::vector<u64> c(m + 1);
    for (u64 i = 0; i <= m; ++i) {
        u64 binom = 1;
        for (u64 k = 0; k < i; ++k) binom = binom * (m - k) / (k + 1);
        binom %= p;
        c[i] = binom * binom % p;
        if (m % 2 == 1) c[i] = (p - c[i]) % p;
    }
    return Poly(c, p);
}

} // namespace

TEST(Legendre, AdditionExamples)
{
    using Pt = CurvePoint<Fp>;
    const LegendreCurve<Fp> c(Fp(2, 7));
    const Pt P = Pt::affine(Fp(5, 7), Fp(2, 7));
    EXPECT_EQ(point_add(c, P, Pt::infinity()), P);
    EXPECT_EQ(point_add(c, Pt::affine(Fp(0, 7), Fp(0, 7)), Pt::affine(Fp(1, 7), Fp(0, 7))), Pt::affine(Fp(2, 7), Fp(0, 7)));
    EXPECT_EQ(point_add(c, P, P), Pt::affine(Fp(2, 7), Fp(0, 7)));
    EXPECT_EQ(c.mul(4, P), Pt::infinity());
    try {
        point_add(c, Pt::affine(Fp(3, 7), Fp(3, 7)), P);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotOnCurve);
    }
}

TEST(Legendre, SingularParameters)
{
    EXPECT_THROW(LegendreCurve<Fp>(Fp(0, 5)), Error);
    EXPECT_THROW(LegendreCurve<Fp>(Fp(1, 5)), Error);
    EXPECT_THROW(LegendreCurve<RatFunc>(RatFunc::constant(1, 3)), Error);
}

TEST(Legendre, TwoTorsionOverFunctionField)
{
    using Pt = CurvePoint<RatFunc>;
    const u64 p = 3;
    const RatFunc t = RatFunc::t(p), zero = RatFunc::constant(0, p);
    const LegendreCurve<RatFunc> E(t);
    const auto tt = two_torsion(E);
    ASSERT_EQ(tt.size(), 4u);
    EXPECT_EQ(tt[0], Pt::infinity());
    EXPECT_EQ(tt[1], Pt::affine(zero, zero));
    EXPECT_EQ(tt[2], Pt::affine(RatFunc::constant(1, p), zero));
    EXPECT_EQ(tt[3], Pt::affine(t, zero));
    for (const auto& Q : tt) EXPECT_EQ(point_add(E, Q, Q), Pt::infinity());
    EXPECT_EQ(point_add(E, tt[1], tt[2]), tt[3]);
}

TEST(Legendre, TwoTorsionOverF7)
{
    const LegendreCurve<Fp> c(Fp(2, 7));
    const auto tt = c.two_torsion();
    ASSERT_EQ(tt.size(), 4u);
    EXPECT_EQ(tt[3], CurvePoint<Fp>::affine(Fp(2, 7), Fp(0, 7)));
}

TEST(Legendre, PointEnumerationOracle)
{
    const LegendreCurve<Fp> c(Fp(2, 7));
    std::vector<std::pair<u64, u64>> affine;
    for (const auto& P : enumerate_points(c))
        if (!P.is_infinity()) affine.emplace_back(P.x().value(), P.y().value());
    std::sort(affine.begin(), affine.end());
    const std::vector<std::pair<u64, u64>> expected{{0, 0}, {1, 0}, {2, 0}, {5, 2}, {5, 5}, {6, 1}, {6, 6}};
    EXPECT_EQ(affine, expected);
}

TEST(Legendre, PointCounts)
{
    EXPECT_EQ(point_count(LegendreCurve<Fp>(Fp(2, 3))), 4u);
    EXPECT_EQ(point_count(LegendreCurve<Fp>(Fp(2, 5))), 8u);
    EXPECT_EQ(point_count(LegendreCurve<Fp>(Fp(2, 7))), 8u);
    try {
        point_count(LegendreCurve<RatFunc>(RatFunc::t(3)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotFinite);
    }
}

TEST(Legendre, GroupLawSmallFields)
{
    for (u64 p : {3, 5, 7, 11, 13}) {
        for (u64 l = 2; l < p; ++l) {
            const LegendreCurve<Fp> c(Fp(static_cast<i64>(l), p));
            const GroupTable<Fp> g(c);
            EXPECT_EQ(g.count_assoc_failures(), 0u) << "p=" << p << " lambda=" << l;
            EXPECT_TRUE(g.commutative());
            EXPECT_TRUE(hasse_bound_holds(p, g.size()));
        }
    }
    const ExtField f9 = ext_field_build(3, 2);
    for (u64 idx = 2; idx < f9->q; ++idx) {
        const ExtElem lam = ExtElem::element_at(f9, idx);
        if ((lam - lam.make(1)).is_zero()) continue;
        const GroupTable<ExtElem> g{LegendreCurve<ExtElem>(lam)};
        EXPECT_EQ(g.count_assoc_failures(), 0u);
        EXPECT_EQ(g.size(), point_count(LegendreCurve<ExtElem>(lam)));
    }
}

TEST(Hasse, Examples)
{
    EXPECT_EQ(hasse_poly(3), Poly({2, 2}, 3));
    EXPECT_EQ(hasse_poly(5), Poly({1, 4, 1}, 5));
    EXPECT_EQ(hasse_poly(7), Poly({6, 5, 5, 6}, 7));
    EXPECT_EQ(hasse_poly(7).degree(), 3);
    EXPECT_THROW(hasse_poly(9), Error);
}

TEST(Hasse, MatchesDeuringUpTo50)
{
    for (u64 p = 3; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        EXPECT_EQ(hasse_poly(p), deuring(p)) << p;
        EXPECT_EQ(hasse_poly(p).degree(), static_cast<int>((p - 1) / 2));
    }
}

TEST(Supersingular, OrdinaryWitness)
{
    const auto w3 = is_ordinary_generic(3);
    EXPECT_TRUE(w3.ordinary);
    EXPECT_EQ(format_ratfunc(w3.witness), "2 + 2*t");
    const auto w5 = is_ordinary_generic(5);
    EXPECT_TRUE(w5.ordinary);
    EXPECT_EQ(format_ratfunc(w5.witness), "1 + 4*t + t^2");
    EXPECT_TRUE(is_ordinary_generic(7).ordinary);
}

TEST(Supersingular, Lambda)
{
    const ExtElem l3 = find_supersingular_lambda(3);
    EXPECT_TRUE(l3.in_prime_field());
    EXPECT_EQ(l3.coords()[0], 2u);
    const ExtElem l5 = find_supersingular_lambda(5);
    EXPECT_FALSE(l5.in_prime_field());
    EXPECT_EQ(l5.coords(), (std::vector<u64>{3, 1}));
    EXPECT_TRUE(hasse_poly(5).eval_at(l5).is_zero());
}

TEST(Supersingular, AllPrimesUpTo50)
{
    for (u64 p = 3; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        const NonIsogenyCert c = non_isogeny_certificate(p);
        EXPECT_TRUE(c.valid()) << p;
        EXPECT_TRUE(hasse_bound_holds(c.count_field_size, c.point_count));
        EXPECT_EQ(c.trace % static_cast<i64>(p), 0);
        if (c.lambda0_in_prime_field) {
            EXPECT_EQ(c.point_count, p + 1);
        }
    }
}

TEST(Supersingular, Certificates)
{
    const NonIsogenyCert c3 = non_isogeny_certificate(3);
    EXPECT_EQ(c3.point_count, 4u);
    EXPECT_EQ(c3.count_field_size, 3u);
    const NonIsogenyCert c5 = non_isogeny_certificate(5);
    EXPECT_FALSE(c5.lambda0_in_prime_field);
    EXPECT_EQ(c5.count_field_size, 25u);
    try {
        non_isogeny_certificate(2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidPrime);
    }
}

TEST(CurveText, DescriptorAndPoints)
{
    const CurveDescriptor d = parse_curve_descriptor("legendre p=3 lambda=t");
    EXPECT_EQ(d.p, 3u);
    EXPECT_FALSE(d.over_prime_field());
    EXPECT_EQ(format_curve_descriptor(d), "legendre p=3 lambda=t");
    const auto P = parse_point("(t,0)", 3);
    EXPECT_TRUE(d.over_function_field().contains(P));
    EXPECT_EQ(format_point(P), "(t,0)");
    EXPECT_TRUE(parse_point("O", 3).is_infinity());
    EXPECT_THROW(parse_curve_descriptor("weierstrass p=3"), Error);
}
