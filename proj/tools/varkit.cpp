#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "varkit/report.hpp"
#include "varkit/vdformat.hpp"
#include "varkit/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 input error.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

varkit::ReportFormat to_format(const std::string& name) {
    return name == "machine" ? varkit::ReportFormat::Machine : varkit::ReportFormat::Text;
}

int run_analyze(const std::string& path, const std::string& format) {
    try {
        varkit::VarietyDocument doc = varkit::load_variety_document(path);
        std::cout << varkit::render_analysis(doc.result_name, *doc.result, to_format(format));
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return kInputError;
    }
}

int run_cohomology(const std::string& path, const std::string& cls, const std::string& format) {
    try {
        varkit::VarietyDocument doc = varkit::load_variety_document(path);
        varkit::DivisorClass L = varkit::parse_divisor_class(cls, doc.result->lattice());
        std::cout << varkit::render_cohomology(doc.result_name, *doc.result, L, to_format(format));
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}

int run_verify(std::uint64_t seed, const std::string& only, const std::string& phi_path,
               const std::string& format) {
    varkit::VerificationOptions opts;
    opts.seed = seed;
    opts.only = only;
    if (!phi_path.empty()) {
        std::ifstream in(phi_path);
        if (!in) {
            std::cerr << "error: cannot open '" << phi_path << "'\n";
            return kInputError;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            opts.phi_override = varkit::parse_section(buf.str());
        } catch (const std::exception& e) {
            std::cerr << "error: " << phi_path << ": " << e.what() << '\n';
            return kInputError;
        }
    }

    const auto results = varkit::run_verification(opts);
    std::size_t passed = 0;
    const varkit::CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
        if (r.pass)
            ++passed;
        else if (!first_failure)
            first_failure = &r;
    }
    if (format == "machine") {
        for (const auto& r : results) {
            std::cout << "check." << r.id << "=" << (r.pass ? "pass" : "fail") << '\n';
            std::cout << "check." << r.id << ".criterion=" << r.criterion << '\n';
            if (!r.pass)
                std::cout << "check." << r.id << ".detail=" << r.detail << '\n';
        }
        std::cout << "checks.total=" << results.size() << '\n';
        std::cout << "checks.passed=" << passed << '\n';
        std::cout << "result=" << (first_failure ? "fail" : "pass") << '\n';
    } else {
        for (const auto& r : results)
            std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.criterion << " | "
                      << r.id << ": " << r.detail << '\n';
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    if (first_failure) {
        std::cerr << "verification failed at " << first_failure->id << ": "
                  << first_failure->detail << '\n';
        return kVerificationFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact-arithmetic calculator for varieties built from atomic pieces: Hodge "
        "diamonds, canonical classes, ampleness certificates, sheaf cohomology, "
        "Grothendieck groups and their torsion obstructions"};
    app.require_subcommand(1);

    std::string analyze_path, analyze_format = "text";
    auto* analyze = app.add_subcommand("analyze", "full report for a variety description file");
    analyze->add_option("file", analyze_path, "variety description file")->required();
    analyze->add_option("--format", analyze_format, "text or machine (key=value lines)")
        ->check(CLI::IsMember({"text", "machine"}));

    std::uint64_t seed = 1;
    std::string only, phi_path, verify_format = "text";
    auto* verify = app.add_subcommand(
        "verify-paper", "replay the bundled constructions end to end and check every expected "
                        "value");
    verify->add_option("--seed", seed, "seed for the section and the property suites");
    verify->add_option("--only", only, "restrict to one group")
        ->check(CLI::IsMember({"theorem1", "theorem2", "lemma", "properties"}));
    verify->add_option("--phi", phi_path,
                       "inject a 3x12 section matrix file in place of the seeded section");
    verify->add_option("--format", verify_format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string coh_path, coh_class, coh_format = "text";
    auto* coh = app.add_subcommand("cohomology", "h^0..h^d and chi of a line bundle");
    coh->add_option("file", coh_path, "variety description file")->required();
    coh->add_option("class", coh_class, "divisor class, e.g. \"H\" or \"-H1 - H2\"")->required();
    coh->add_option("--format", coh_format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    if (analyze->parsed())
        return run_analyze(analyze_path, analyze_format);
    if (verify->parsed())
        return run_verify(seed, only, phi_path, verify_format);
    if (coh->parsed())
        return run_cohomology(coh_path, coh_class, coh_format);
    return kInputError;
}
