#include <gtest/gtest.h>

#include "autkum/verifier/pipeline.hpp"

using namespace autkum;

TEST(Pipeline, DefaultsPassAllGroups)
{
    const VerificationReport r = run_pipeline(PipelineParams{});
    ASSERT_EQ(r.checks.size(), 13u);
    for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.witness.dump();
    EXPECT_TRUE(r.passed());
    const Json j = report_json(r);
    EXPECT_EQ(j["overall"], "pass");
    EXPECT_EQ(j["version"], kReportVersion);
    EXPECT_EQ(j["params"]["seed"], kDefaultSeed);
    EXPECT_FALSE(j["assumptions"].empty());
}

TEST(Pipeline, OtherPrimes)
{
    for (u64 p : {5, 7, 11}) {
        PipelineParams params;
        params.p = p;
        params.depth = 20;
        params.nmax = 5;
        EXPECT_TRUE(run_pipeline(params).passed()) << p;
    }
}

TEST(Pipeline, InvalidParams)
{
    for (u64 p : {0, 1, 2, 4, 9}) {
        PipelineParams params;
        params.p = p;
        try {
            run_pipeline(params);
            FAIL() << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::InvalidPrime);
            EXPECT_NE(std::string(e.what()).find("odd prime required"), std::string::npos);
        }
    }
    PipelineParams d;
    d.depth = 0;
    EXPECT_THROW(run_pipeline(d), Error);
    PipelineParams n;
    n.nmax = 0;
    EXPECT_THROW(run_pipeline(n), Error);
}

TEST(Pipeline, DeterministicOutput)
{
    PipelineParams params;
    EXPECT_EQ(emit_report(run_pipeline(params), ReportFormat::Json), emit_report(run_pipeline(params), ReportFormat::Json));
    params.seed = 99;
    const std::string a = emit_report(run_pipeline(params), ReportFormat::Text);
    EXPECT_EQ(a, emit_report(run_pipeline(params), ReportFormat::Text));
}

TEST(Pipeline, TextFollowsExecutionOrder)
{
    const VerificationReport r = run_pipeline(PipelineParams{});
    const std::string text = emit_report(r, ReportFormat::Text);
    size_t pos = 0;
    for (const auto& c : r.checks) {
        const size_t at = text.find(c.id + " pass", pos);
        ASSERT_NE(at, std::string::npos) << c.id;
        EXPECT_TRUE(at == 0 || text[at - 1] == '\n');
        pos = at;
    }
    EXPECT_NE(text.find("\noverall pass\n"), std::string::npos);
}

TEST(Pipeline, CorruptGramEntryFailsRank)
{
    const CurveConfig bad = kummer_config().with_gram_entry("E1", "E2", 1);
    const VerificationReport r = run_pipeline(PipelineParams{}, bad);
    EXPECT_FALSE(r.passed());
    const CheckResult* g = r.find("gram_rank");
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->status, CheckStatus::Fail);
    EXPECT_NE(g->witness["rank"], 18);
    EXPECT_EQ(report_json(r)["overall"], "fail");
}

TEST(Pipeline, BrokenFibersGateMordellWeil)
{
    // C11 no longer meets F1, so D1 stops being a cycle.
    const CurveConfig bad = kummer_config().with_gram_entry("C11", "F1", 0);
    const VerificationReport r = run_pipeline(PipelineParams{}, bad);
    EXPECT_EQ(r.find("kodaira_fibers")->status, CheckStatus::Fail);
    EXPECT_EQ(r.find("mw_action")->status, CheckStatus::Error);
    EXPECT_FALSE(r.passed());
    // Checks that do not depend on the lattice are unaffected.
    EXPECT_EQ(r.find("conjugation")->status, CheckStatus::Pass);
    EXPECT_EQ(r.find("schreier")->status, CheckStatus::Pass);
}
