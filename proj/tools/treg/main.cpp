#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "treg/error.hpp"
#include "treg/quad/integrand.hpp"
#include "treg/report/commands.hpp"
#include "treg/report/verification.hpp"

namespace {

using namespace treg::report;

struct Flags {
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mc_n;
    std::string out;
    std::string corpus;
    std::string format = "json";
};

RunConfig effective_config(const Flags& f) {
    RunConfig cfg = config_from_environment();
    if (f.tol) cfg.tol = *f.tol;
    if (f.seed) cfg.mc_seed = *f.seed;
    if (f.mc_n) cfg.mc_n = *f.mc_n;
    return parse_config("", cfg);
}

int emit(const CommandResult& r, const Flags& f) {
    if (f.out.empty()) {
        std::cout << r.output;
    } else {
        std::ofstream os(f.out, std::ios::binary);
        if (!os) {
            std::cerr << "treg: cannot write '" << f.out << "'\n";
            return 2;
        }
        os << r.output;
    }
    return r.exit_code;
}

std::filesystem::path require_corpus(const Flags& f) {
    if (f.corpus.empty()) treg::fail(treg::ErrorCode::invalid_argument, "--corpus <path> is required");
    return f.corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"treg: verification harness for twisted cycles and regulator integrals"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--tol", flags.tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "Monte Carlo seed");
    app.add_option("--mc-n", flags.mc_n, "Monte Carlo sample count")->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    app.add_option("--out", flags.out, "write the document here instead of stdout");
    app.add_option("--corpus", flags.corpus, "JSON corpus file");
    app.add_option("--format", flags.format, "json or csv (surjectivity only)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string case_id, target;
    bool oracle_only = false;
    auto* tame = app.add_subcommand("verify-tame", "tame, higher-tame, boundary-squared and reciprocity suites");
    auto* recip = app.add_subcommand("verify-reciprocity", "Weil reciprocity suite");
    auto* complete = app.add_subcommand("complete", "complete a precycle to a twisted cycle");
    complete->add_option("target", target, "completion instance id")->required();
    auto* integrate = app.add_subcommand("integrate", "integrate one regulator case");
    integrate->add_option("case", case_id, "case id")->required()->check(CLI::IsMember(treg::quad::case_ids()));
    integrate->add_flag("--oracle-only", oracle_only, "Monte Carlo only");
    auto* surj = app.add_subcommand("surjectivity", "2x2 regulator matrix and determinant enclosure");
    auto* harm = app.add_subcommand("harmonicity", "flat-norm periodicity and discrete Laplacian decay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = effective_config(flags);
        if (flags.format == "csv" && !surj->parsed())
            treg::fail(treg::ErrorCode::invalid_argument, "--format csv applies to surjectivity only");
        if (tame->parsed()) return emit(cmd_verify_tame(require_corpus(flags), cfg), flags);
        if (recip->parsed()) return emit(cmd_verify_reciprocity(require_corpus(flags), cfg), flags);
        if (complete->parsed()) return emit(cmd_complete(require_corpus(flags), target, cfg), flags);
        if (integrate->parsed()) return emit(cmd_integrate(case_id, cfg, oracle_only), flags);
        if (surj->parsed())
            return emit(cmd_surjectivity(cfg, flags.format == "csv" ? Format::csv : Format::json), flags);
        if (harm->parsed()) return emit(cmd_harmonicity(require_corpus(flags), cfg), flags);
    } catch (const treg::Error& e) {
        std::cerr << "treg: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "treg: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
