// Command-line front end: verify a radius, emit density tables, render
// windows of the code as text or SVG, and run the claim suites.
//
// Exit status: 0 success / code valid, 1 verification or claims found
// violations, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "hexid/claims.hpp"
#include "hexid/code.hpp"
#include "hexid/density.hpp"
#include "hexid/render.hpp"
#include "hexid/verifier.hpp"

namespace {

constexpr int kMaxRadius = 64;  // keeps the fundamental domain small

int run_verify(int r, bool drop_cdprime) {
    const hexid::CodeParams params = hexid::make_params(r);
    if (r == 1)
        std::cerr << "note: r=1 is below the tabulated range of the construction;"
                  << " reporting the verified outcome as-is\n";
    const hexid::PeriodicCode code =
        drop_cdprime ? hexid::c_prime_only(params) : hexid::full_code(params);
    const hexid::VerificationReport report = hexid::verify(code);

    std::cout << "r=" << r << " valid=" << (report.valid ? "true" : "false")
              << " vertices=" << report.vertices_checked << " pairs=" << report.pairs_checked
              << "\n";
    std::size_t lines = 0;
    for (const hexid::Vertex v : report.coverage_failures) {
        if (lines++ >= hexid::kMaxCounterexamples) break;
        std::cout << "uncovered " << hexid::to_string(v) << "\n";
    }
    for (const auto& [u, v] : report.confusion_pairs) {
        if (lines++ >= hexid::kMaxCounterexamples) break;
        std::cout << "confused " << hexid::to_string(u) << " " << hexid::to_string(v) << "\n";
    }
    return report.valid ? 0 : 1;
}

int run_density(int r_min, int r_max, bool with_literature) {
    std::cout << hexid::density_table(r_min, r_max, with_literature);
    return 0;
}

int run_render(int r, const hexid::Window& w, const std::string& format) {
    const hexid::CodeParams params = hexid::make_params(r);
    std::cout << (format == "svg" ? hexid::render_svg(w, params) : hexid::render_text(w, params));
    return 0;
}

int run_claims(int max_k, int max_r) {
    bool all_pass = true;
    for (const hexid::ClaimResult& res : hexid::run_claim_suites(max_k, max_r)) {
        std::cout << "claim" << res.claim << " " << (res.pass ? "pass" : "FAIL")
                  << " cases=" << res.cases << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-identifying codes on the hexagonal grid"};
    app.require_subcommand(1);

    int r = 0;
    bool drop_cdprime = false;
    auto* verify = app.add_subcommand("verify", "exhaustively verify one fundamental domain");
    verify->add_option("--r", r, "code radius")->required()->check(CLI::Range(1, kMaxRadius));
    verify->add_flag("--drop-cdprime", drop_cdprime, "control variant without the C'' rows");

    int r_min = 0, r_max = 0;
    bool with_literature = false;
    auto* density = app.add_subcommand("density", "exact density table (TSV)");
    density->add_option("--r-min", r_min, "first radius")->required()->check(CLI::Range(1, kMaxRadius));
    density->add_option("--r-max", r_max, "last radius")->required()->check(CLI::Range(1, kMaxRadius));
    density->add_flag("--with-literature", with_literature, "append published reference columns");

    hexid::Window window;
    std::string format = "text";
    auto* render = app.add_subcommand("render", "draw a window of the code");
    render->add_option("--r", r, "code radius")->required()->check(CLI::Range(1, kMaxRadius));
    render->add_option("--x0", window.x0, "left column")->required();
    render->add_option("--x1", window.x1, "right column")->required();
    render->add_option("--y0", window.y0, "bottom row")->required();
    render->add_option("--y1", window.y1, "top row")->required();
    render->add_option("--format", format, "text or svg")
        ->check(CLI::IsMember({"text", "svg"}));

    int max_k = 0, max_r = 0;
    auto* claims = app.add_subcommand("claims", "run the distance/spacing claim suites");
    claims->add_option("--max-k", max_k, "path-family bound")->required()->check(CLI::Range(1, kMaxRadius));
    claims->add_option("--max-r", max_r, "radius bound")->required()->check(CLI::Range(1, kMaxRadius));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(r, drop_cdprime);
        if (density->parsed()) {
            if (r_min > r_max) {
                std::cerr << "error: --r-min must not exceed --r-max\n";
                return 2;
            }
            return run_density(r_min, r_max, with_literature);
        }
        if (render->parsed()) return run_render(r, window, format);
        if (claims->parsed()) return run_claims(max_k, max_r);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
