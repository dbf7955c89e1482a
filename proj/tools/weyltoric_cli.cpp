// Command-line surface: compute, verify and export the Betti tables.
// Exit codes: 0 success, 1 verification/self-check failure, 2 invalid input
// or an over-budget request without --force.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weyltoric/pipeline.hpp"
#include "weyltoric/report.hpp"
#include "weyltoric/sequences.hpp"

namespace {

namespace fs = std::filesystem;
using namespace weyltoric;

fs::path default_cache_dir() {
    if (const char* env = std::getenv("WEYLTORIC_CACHE_DIR")) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return fs::path(xdg) / "weyltoric";
    if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "weyltoric";
    return fs::temp_directory_path() / "weyltoric-cache";
}

struct CommonFlags {
    std::string family = "C";
    int n = 0;
    std::string format = "md";
    int jobs = 0;
    std::string cache_dir;
    bool no_cache = false;
    bool force = false;

    PipelineOptions pipeline_options() const {
        PipelineOptions opt;
        opt.jobs = jobs;
        if (!no_cache) opt.cache_dir = cache_dir.empty() ? default_cache_dir() : fs::path(cache_dir);
        return opt;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_pipeline_flags) {
    cmd->add_option("--family", flags.family, "Root-system family (A, B, C, D)")->required();
    cmd->add_option("--n", flags.n, "Rank")->required();
    cmd->add_option("--format", flags.format, "Output format: md, json or csv");
    if (with_pipeline_flags) {
        cmd->add_option("--jobs", flags.jobs, "Parallel rank computations (0 = auto)");
        cmd->add_option("--cache-dir", flags.cache_dir,
                        "Cache directory (default: $WEYLTORIC_CACHE_DIR or ~/.cache/weyltoric)");
        cmd->add_flag("--no-cache", flags.no_cache, "Bypass the on-disk cache");
        cmd->add_flag("--force", flags.force, "Run beyond the default rank budget");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology of real toric varieties of Weyl chambers (types C and D)"};
    app.require_subcommand(1);

    CommonFlags formula_flags, compute_flags, verify_flags;
    std::string coeff_str = "q";
    std::string strategy_str = "orbit";
    std::string level_str = "full";

    auto* formula = app.add_subcommand("formula", "Closed-form Betti numbers (families A, B, C, D)");
    add_common(formula, formula_flags, false);

    auto* compute = app.add_subcommand(
        "compute", "Compute Betti numbers from subcomplex cohomology (families C, D)");
    add_common(compute, compute_flags, true);
    compute->add_option("--coeff", coeff_str, "Coefficients: q, z, gf2, gf3, gf<p>");
    compute->add_option("--strategy", strategy_str, "Strategy: full, orbit or poset");

    auto* verify = app.add_subcommand("verify", "Cross-check formulas, pipeline and invariants");
    add_common(verify, verify_flags, true);
    verify->add_option("--level", level_str, "quick (formulas only) or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (formula->parsed()) {
            Family family = parse_family(formula_flags.family);
            std::cout << render_formula(family, formula_flags.n, parse_format(formula_flags.format));
            return 0;
        }
        if (compute->parsed()) {
            Family family = parse_family(compute_flags.family);
            Coefficients coeff = parse_coefficients(coeff_str);
            Strategy strategy = parse_strategy(strategy_str);
            if (strategy == Strategy::Full && compute_flags.n > 7 && !compute_flags.force)
                throw std::invalid_argument(
                    "full strategy beyond n = 7 is expensive; pass --force to run anyway");
            BettiReport report = betti_real_toric(family, compute_flags.n, coeff, strategy,
                                                  compute_flags.pipeline_options());
            std::cout << render_betti_report(report, parse_format(compute_flags.format));
            return 0;
        }
        if (verify->parsed()) {
            Family family = parse_family(verify_flags.family);
            VerifyLevel level = parse_verify_level(level_str);
            if (level == VerifyLevel::Full && verify_flags.n > 6 && !verify_flags.force)
                throw std::invalid_argument(
                    "full verification beyond n = 6 is expensive; pass --force to run anyway");
            VerificationReport report =
                weyltoric::verify(family, verify_flags.n, level, verify_flags.pipeline_options());
            std::cout << render_verification_report(report, parse_format(verify_flags.format));
            return report.overall ? 0 : 1;
        }
    } catch (const internal_check_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
