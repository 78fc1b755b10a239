#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "autkum/exactfield/prime_field.hpp"

namespace autkum {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum class ReportFormat { Json, Text };

struct PipelineParams {
    u64 p = 3;
    i64 depth = 50;
    i64 nmax = 20;
    std::uint64_t seed = kDefaultSeed;
    ReportFormat format = ReportFormat::Json;
};

enum class CheckStatus { Pass, Fail, Error };

inline const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
    }
    return "error";
}

struct CheckResult {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::Error;
    Json witness = Json::object();
};

struct VerificationReport {
    PipelineParams params;
    std::vector<std::string> assumptions;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        if (checks.empty()) return false;
        for (const auto& c : checks)
            if (c.status != CheckStatus::Pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& id) const
    {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

inline Json report_json(const VerificationReport& r)
{
    Json j;
    j["version"] = kReportVersion;
    j["params"] = {{"p", r.params.p},
                   {"depth", r.params.depth},
                   {"nmax", r.params.nmax},
                   {"seed", r.params.seed},
                   {"format", r.params.format == ReportFormat::Json ? "json" : "text"}};
    j["assumptions"] = r.assumptions;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"description", c.description}, {"status", status_name(c.status)}, {"witness", c.witness}});
    j["checks"] = std::move(checks);
    j["overall"] = r.passed() ? "pass" : "fail";
    return j;
}

/// JSON (2-space indent, trailing newline) or one line per check plus a
/// closing "overall" line.
inline std::string emit_report(const VerificationReport& r, ReportFormat f)
{
    if (f == ReportFormat::Json) return report_json(r).dump(2) + "\n";
    std::string out;
    for (const auto& c : r.checks) {
        out += c.id;
        out += ' ';
        out += status_name(c.status);
        out += ' ';
        out += c.witness.dump();
        out += '\n';
    }
    out += "overall ";
    out += r.passed() ? "pass" : "fail";
    out += '\n';
    return out;
}

} // namespace autkum
