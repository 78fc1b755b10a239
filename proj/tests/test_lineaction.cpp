#include <gtest/gtest.h>

#include <random>

#include "autkum/exactfield/text.hpp"
#include "autkum/lineaction/affine.hpp"
#include "autkum/lineaction/differential.hpp"
#include "autkum/lineaction/mw_action.hpp"
#include "autkum/lineaction/word.hpp"

using namespace autkum;

namespace {

RatFunc rf(const char* s, u64 p) { return parse_ratfunc(s, p); }

AffineMap random_map(std::mt19937_64& rng, u64 p)
{
    auto random_ratfunc = [&] {
        std::vector<u64> n(1 + rng() % 3), d(1 + rng() % 2);
        for (auto& c : n) c = rng() % p;
        for (auto& c : d) c = rng() % p;
        if (Poly(d, p).is_zero()) d = {1};
        return ratfunc_normalize(Poly(n, p), Poly(d, p));
    };
    RatFunc a = random_ratfunc();
    while (a.is_zero()) a = random_ratfunc();
    return AffineMap(a, random_ratfunc());
}

} // namespace

TEST(Affine, GroupOpExamples)
{
    const u64 p = 5;
    const auto g = mw_generators(p);
    const AffineMap f1 = g.at("f1"), f2 = g.at("f2");
    EXPECT_EQ(affine_group_ops(f1, f2, AffineOp::Compose), AffineMap(rf("t", p), rf("t", p)));
    EXPECT_EQ(affine_group_ops(f1, std::nullopt, AffineOp::Invert), AffineMap(rf("t^-1", p), rf("0", p)));
    EXPECT_TRUE(affine_group_ops(f2, std::nullopt, AffineOp::Power, static_cast<i64>(p)).is_identity());
    EXPECT_THROW(AffineMap(rf("0", p), rf("1", p)), Error);
    EXPECT_EQ(parse_affine(format_affine(f1), p), f1);
}

TEST(Affine, GroupAxioms)
{
    std::mt19937_64 rng(8);
    for (u64 p : {3, 5, 7}) {
        const AffineMap id = AffineMap::identity(p);
        for (int k = 0; k < 200; ++k) {
            const AffineMap f = random_map(rng, p), g = random_map(rng, p), h = random_map(rng, p);
            EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
            EXPECT_EQ(compose(f, id), f);
            EXPECT_EQ(compose(id, f), f);
            EXPECT_TRUE(compose(f, f.inverse()).is_identity());
            EXPECT_TRUE(compose(f.inverse(), f).is_identity());
            const RatFunc x = rf("t^2 + 1", p);
            EXPECT_EQ(compose(f, g)(x), f(g(x)));
            const i64 n = static_cast<i64>(rng() % 9) - 4;
            EXPECT_EQ(f.pow(n).inverse(), f.pow(-n));
        }
    }
}

TEST(Affine, ConjugationLaw)
{
    std::mt19937_64 rng(9);
    for (u64 p : {3, 5, 7}) {
        for (int k = 0; k < 100; ++k) {
            const AffineMap g = random_map(rng, p);
            const RatFunc c = random_map(rng, p).b();
            const AffineMap lhs = compose(compose(g, AffineMap::translation(c)), g.inverse());
            EXPECT_EQ(lhs, AffineMap::translation(g.a() * c));
        }
    }
}

TEST(Affine, FixedPoints)
{
    const u64 p = 5;
    const auto g = mw_generators(p);
    const auto fp1 = fixed_points(g.at("f1"));
    ASSERT_EQ(fp1.size(), 2u);
    EXPECT_EQ(fp1[0].x, std::optional<RatFunc>(rf("0", p)));
    EXPECT_EQ(fp1[0].multiplier, rf("t", p));
    EXPECT_FALSE(fp1[1].x.has_value());
    EXPECT_EQ(fp1[1].multiplier, rf("t^-1", p));

    const auto fp2 = fixed_points(g.at("f2"));
    ASSERT_EQ(fp2.size(), 1u);
    EXPECT_FALSE(fp2[0].x.has_value());
    EXPECT_TRUE(fp2[0].multiplier.is_one());
    EXPECT_TRUE(fp2[0].parabolic);

    const auto inv = fixed_points(AffineMap(rf("4", p), rf("3", p)));
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(inv[0].multiplier, rf("4", p));
    EXPECT_EQ(inv[1].multiplier, rf("4", p));
    EXPECT_EQ(*inv[0].x, rf("3", p) / rf("2", p));

    try {
        fixed_points(AffineMap::identity(p));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IdentityMap);
    }
}

TEST(Affine, MultiplierProductAndTranslationOrder)
{
    std::mt19937_64 rng(10);
    for (u64 p : {3, 5, 7}) {
        for (int k = 0; k < 300; ++k) {
            const AffineMap f = random_map(rng, p);
            if (f.is_identity()) continue;
            const auto fps = fixed_points(f);
            if (!f.a().is_one()) {
                ASSERT_EQ(fps.size(), 2u);
                EXPECT_TRUE((fps[0].multiplier * fps[1].multiplier).is_one());
                EXPECT_EQ(f(*fps[0].x), *fps[0].x);
            } else {
                ASSERT_EQ(fps.size(), 1u);
                EXPECT_TRUE(fps[0].parabolic);
                // Every nonidentity translation has order exactly p.
                for (u64 j = 1; j < p; ++j) EXPECT_FALSE(f.pow(static_cast<i64>(j)).is_identity());
                EXPECT_TRUE(f.pow(static_cast<i64>(p)).is_identity());
            }
        }
    }
}

TEST(Words, ParseAndReduce)
{
    const GroupWord w = parse_word("f1^2 f1^-2 f2 f2");
    EXPECT_EQ(w, GroupWord::gen("f2", 2));
    EXPECT_EQ(parse_word("1").length(), 0u);
    EXPECT_EQ(parse_word("a b^-1 b a^-1").to_string(), "1");
    EXPECT_EQ((GroupWord::gen("a") * GroupWord::gen("b", -2)).to_string(), "a b^-2");
    EXPECT_THROW(parse_word("^2"), Error);
    EXPECT_THROW(parse_word("a^x"), Error);
}

TEST(Words, EvaluateExamples)
{
    for (u64 p : {3, 5, 7}) {
        const auto dict = mw_generators(p);
        EXPECT_EQ(evaluate_word(parse_word("f1 f2 f1^-1"), dict, p), AffineMap::translation(RatFunc::t(p)));
        EXPECT_TRUE(evaluate_word(GroupWord{}, dict, p).is_identity());
        EXPECT_TRUE(evaluate_word(GroupWord::gen("f2", static_cast<i64>(p)), dict, p).is_identity());
        try {
            evaluate_word(parse_word("f3"), dict, p);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::UnknownGenerator);
        }
    }
}

TEST(Words, ConjugateGenerator)
{
    const u64 p = 3;
    EXPECT_EQ(conjugate_generator(2, p), AffineMap::translation(rf("t^2", p)));
    EXPECT_EQ(conjugate_generator(0, p), AffineMap::translation(rf("1", p)));
    EXPECT_EQ(conjugate_generator(-3, p), AffineMap::translation(rf("t^-3", p)));
    for (u64 q : {3, 5, 7})
        for (i64 n = -20; n <= 20; ++n) EXPECT_EQ(conjugate_generator(n, q), AffineMap::translation(RatFunc::monomial(n, 1, q)));
}

TEST(Words, ClosureAndMembership)
{
    std::mt19937_64 rng(11);
    for (u64 p : {3, 5, 7}) {
        const auto dict = mw_generators(p);
        for (int k = 0; k < 300; ++k) {
            std::vector<GroupWord::Letter> letters;
            i64 f1 = 0;
            for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i) {
                const bool is_f1 = rng() % 2;
                const i64 e = static_cast<i64>(rng() % 7) - 3;
                if (is_f1) f1 += e;
                letters.emplace_back(is_f1 ? "f1" : "f2", e);
            }
            const AffineMap f = evaluate_word(GroupWord(letters), dict, p);
            EXPECT_EQ(f.a(), RatFunc::monomial(f1, 1, p));
            EXPECT_NO_THROW(laurent_coeffs(f.b()));
            const bool translation = f.is_translation();
            EXPECT_EQ(translation, f1 == 0);
            if (!f.is_identity()) {
                const auto fps = fixed_points(f);
                EXPECT_EQ(fps.back().multiplier.is_one(), translation);
            }
        }
    }
}

TEST(MordellWeil, TableGatedOnCertificates)
{
    const u64 p = 3;
    const CurveConfig cfg = kummer_config();
    const FibrationRecord r1 = certify_fibration(cfg, kummer_d1(cfg), "C31", {"C41"});
    const FibrationRecord r2 = certify_fibration(cfg, kummer_d2(cfg), "C21", {"C31"});
    ASSERT_TRUE(r1.verified());
    ASSERT_TRUE(r2.verified());
    EXPECT_EQ(mw_action(cfg, r1, "C41", p), AffineMap(RatFunc::t(p), RatFunc::constant(0, p)));
    EXPECT_EQ(mw_action(cfg, r2, "C31", p), AffineMap::translation(RatFunc::constant(1, p)));
    EXPECT_TRUE(mw_action(cfg, r1, "C31", p).is_identity());

    try {
        mw_action(cfg, r1, "C33", p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnverifiedFibration);
    }
    const FibrationRecord odd = certify_fibration(cfg, kummer_d1(cfg), "C41", {"C31"});
    try {
        mw_action(cfg, odd, "C31", p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownAction);
    }
    const FibrationRecord bogus = certify_fibration(cfg, cfg.curve("C"), "C31", {"C41"});
    EXPECT_FALSE(bogus.verified());
    try {
        mw_action(cfg, bogus, "C41", p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnverifiedFibration);
    }
}

TEST(PairCalculus, Examples)
{
    const u64 p = 7;
    const Fp one(1, p), two(2, p), three(3, p);
    EXPECT_EQ(std::get<Fp>(pair_calculus(DifferentialPair<Fp>(one, three), PairQuery::CanonicalRep)), three);
    EXPECT_TRUE(std::get<bool>(pair_calculus(DifferentialPair<Fp>(three, three), PairQuery::LiftsToY)));
    EXPECT_FALSE(std::get<bool>(pair_calculus(DifferentialPair<Fp>(one, two), PairQuery::LiftsToY)));
    EXPECT_TRUE(std::get<bool>(pair_calculus(DifferentialPair<Fp>(one, one), PairQuery::InGXP)));
    EXPECT_FALSE(std::get<bool>(pair_calculus(DifferentialPair<Fp>(two, one), PairQuery::InGXCP)));
    EXPECT_THROW(DifferentialPair<Fp>(Fp(0, p), one), Error);
}

TEST(PairCalculus, KernelIdentity)
{
    std::mt19937_64 rng(12);
    for (u64 p : {3, 5, 7}) {
        for (int k = 0; k < 1000; ++k) {
            auto draw = [&] { return rng() % 2 ? Fp(1, p) : Fp(static_cast<i64>(1 + rng() % (p - 1)), p); };
            const DifferentialPair<Fp> d(draw(), draw());
            EXPECT_EQ(in_G_XP(d), in_G_XCP(d) && canonical_rep(d).is_one());
            if (in_G_XCP(d)) {
                EXPECT_EQ(canonical_rep(d), d.alpha2);
            }
        }
    }
    // Over F_p(t) as well.
    const RatFunc t = RatFunc::t(5);
    const DifferentialPair<RatFunc> d(t.make(1), t);
    EXPECT_EQ(canonical_rep(d), t);
    EXPECT_FALSE(in_G_XP(d));
    EXPECT_FALSE(lifts_to_Y(d));
}
