#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "autkum/autkum.hpp"

using namespace autkum;

namespace {

int cmd_verify(const PipelineParams& params, const std::string& out)
{
    const VerificationReport r = run_pipeline(params);
    const std::string text = emit_report(r, params.format);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write " + out);
        f << text;
    }
    return r.passed() ? 0 : 1;
}

int cmd_gram(bool csv)
{
    const CurveConfig cfg = kummer_config();
    if (csv) std::cout << gram_csv(cfg);
    std::cout << "rank " << gram_rank(cfg) << "\n";
    return 0;
}

int cmd_fiber(const std::string& text)
{
    const CurveConfig cfg = kummer_config();
    const Divisor D = parse_divisor(cfg, text);
    const KodairaType k = classify_fiber(cfg, D);
    std::cout << format_divisor(D) << "\n";
    std::cout << "type " << k.to_string() << "\n";
    std::cout << "self-intersection " << intersect(cfg, D, D) << "\n";
    if (k.kind != KodairaType::Kind::NotAFiber) {
        for (const auto& label : *cfg.labels())
            if (check_section(cfg, D, label)) std::cout << "section " << label << "\n";
    }
    return 0;
}

int cmd_conjugate(i64 n, u64 p)
{
    const AffineMap f = conjugate_generator(n, p);
    std::cout << format_affine(f) << "\n";
    return f == AffineMap::translation(RatFunc::monomial(n, 1, p)) ? 0 : 1;
}

int cmd_witness(const std::string& gens, u64 p)
{
    const auto S = parse_laurent_list(gens, p);
    std::cout << "dimension " << span_dimension(S, p) << "\n";
    std::cout << "N " << escape_witness(S, p) << "\n";
    return 0;
}

int cmd_supersingular(u64 p)
{
    const NonIsogenyCert c = non_isogeny_certificate(p);
    std::cout << "hasse_poly " << format_poly(hasse_poly(p)) << "\n";
    std::cout << "lambda0 " << c.lambda0.to_string() << (c.lambda0_in_prime_field ? " (in F_p)" : "") << "\n";
    std::cout << "point_count " << c.point_count << " over F_" << c.count_field_size << "\n";
    std::cout << "trace " << c.trace << "\n";
    std::cout << "certificate " << (c.valid() ? "valid" : "invalid") << "\n";
    return c.valid() ? 0 : 1;
}

int cmd_schreier(const std::string& text, size_t base)
{
    const PermGenerators gens = parse_cycle_generators(text, base + 1);
    const SchreierData d = schreier_data(gens, base);
    std::cout << "index " << d.orbit.size() << "\n";
    for (size_t x : d.orbit) std::cout << "rep " << x << " " << d.transversal.at(x).to_string() << "\n";
    for (const auto& u : d.generators) std::cout << "generator " << u.to_string() << "\n";
    std::cout << "expected " << nielsen_schreier_expected(static_cast<i64>(gens.size()), static_cast<i64>(d.orbit.size()))
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the Kummer surface construction"};
    app.require_subcommand(1);

    PipelineParams params;
    std::string format = "json", out;
    auto* verify = app.add_subcommand("verify", "Run the full verification pipeline");
    verify->add_option("--p", params.p, "odd prime")->capture_default_str();
    verify->add_option("--depth", params.depth, "non-finite-generation depth")->capture_default_str();
    verify->add_option("--nmax", params.nmax, "conjugation range")->capture_default_str();
    verify->add_option("--seed", params.seed, "seed for randomized checks")->capture_default_str();
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    verify->add_option("--out", out, "write the report to FILE");

    bool csv = false;
    auto* gram = app.add_subcommand("gram", "Gram matrix rank of the 24-curve configuration");
    gram->add_flag("--csv", csv, "print the Gram matrix as CSV");

    std::string divisor;
    auto* fiber = app.add_subcommand("fiber", "Classify a divisor as a Kodaira fiber");
    fiber->add_option("--divisor", divisor, "e.g. \"C + 2*C11 + E2\"")->required();

    i64 n = 1;
    u64 p = 3;
    auto* conj = app.add_subcommand("conjugate", "Evaluate f1^n f2 f1^-n on C");
    conj->add_option("--n", n)->required();
    conj->add_option("--p", p)->capture_default_str();

    std::string laurent;
    auto* witness = app.add_subcommand("witness", "Least power of t outside the span of a set");
    witness->add_option("--gens", laurent, "comma-separated Laurent polynomials")->required();
    witness->add_option("--p", p)->capture_default_str();

    auto* ss = app.add_subcommand("supersingular", "Supersingular Legendre parameter and non-isogeny certificate");
    ss->add_option("--p", p)->required();

    std::string cycles;
    size_t base = 0;
    auto* schreier = app.add_subcommand("schreier", "Schreier generators of a point stabilizer");
    schreier->add_option("--gens", cycles, "e.g. \"a=(0 1); b=(0 1)\"")->required();
    schreier->add_option("--base", base)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            params.format = format == "text" ? ReportFormat::Text : ReportFormat::Json;
            return cmd_verify(params, out);
        }
        if (*gram) return cmd_gram(csv);
        if (*fiber) return cmd_fiber(divisor);
        if (*conj) return cmd_conjugate(n, p);
        if (*witness) return cmd_witness(laurent, p);
        if (*ss) return cmd_supersingular(p);
        if (*schreier) return cmd_schreier(cycles, base);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
