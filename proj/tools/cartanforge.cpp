// cartanforge: command-line front end for the verification suites.
#include "cartanforge/cli.hpp"
#include "cartanforge/liealg.hpp"

#include <CLI11.hpp>

#include <iostream>

#ifndef CARTANFORGE_DATA_DIR
#define CARTANFORGE_DATA_DIR "data"
#endif

using namespace cartanforge;

namespace {

std::array<Rational, 3> point3(const std::string& text) {
    auto v = parse_rational_list(text, 3);
    return {v[0], v[1], v[2]};
}

std::array<Rational, 5> point5(const std::string& text) {
    auto v = parse_rational_list(text, 5);
    return {v[0], v[1], v[2], v[3], v[4]};
}

int emit(const CommandResult& result, bool pretty_output) {
    if (pretty_output)
        std::cout << pretty(result.report);
    else
        std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
}

int emit_error(const std::string& kind, const std::string& message, bool pretty_output,
               nlohmann::json extra = nlohmann::json::object()) {
    nlohmann::json j = {{"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
    j["error"].update(extra);
    return emit({2, j}, pretty_output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Cartan connection of Levi nondegenerate hypersurfaces in C^2"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty_output = false;
    std::uint64_t seed = default_seed();
    app.add_flag("--pretty", pretty_output, "Human-readable output instead of JSON");
    app.add_option("--seed", seed, "Random seed (default: CARTANFORGE_SEED or built-in)");

    const std::string data_dir = CARTANFORGE_DATA_DIR;

    int id_points = 20;
    bool id_full = false;
    auto* verify = app.add_subcommand("verify-identities", "Jet-level identities: commutation, relations I-V, corollary a, b");
    verify->add_option("--points", id_points, "Random jet points per identity")->check(CLI::PositiveNumber);
    verify->add_flag("--full", id_full, "Also verify every identity by full expansion");

    std::string coh_algebra = data_dir + "/g.json";
    int coh_level = 2;
    std::optional<int> coh_h;
    auto* coh = app.add_subcommand("cohomology", "Dimensions of C, Z, B, H per homogeneity");
    coh->add_option("--algebra", coh_algebra, "Algebra JSON file")->check(CLI::ExistingFile);
    coh->add_option("--level", coh_level, "Cochain level")->check(CLI::Range(1, 8));
    coh->add_option("--homogeneity", coh_h, "Restrict to one homogeneity");

    std::string tan_algebra = data_dir + "/heisenberg_m.json";
    int tan_max = 10;
    auto* tan = app.add_subcommand("tanaka", "Tanaka prolongation of a negatively graded algebra");
    tan->add_option("--algebra", tan_algebra, "Algebra JSON file")->check(CLI::ExistingFile);
    tan->add_option("--max-level", tan_max, "Highest level computed")->check(CLI::NonNegativeNumber);

    int fl_max = 6;
    auto* fl = app.add_subcommand("free-lie", "Graded dimensions and relations of the free Lie algebra on h1, h2");
    fl->add_option("--max-length", fl_max, "Largest word length")->check(CLI::Range(1, 12));

    std::string curv_phi;
    std::string curv_at = "0,0,0";
    std::string curv_fiber = "0,0,1,0,0";
    auto* curv = app.add_subcommand("curvature", "Essential curvatures and curvature coefficients at a point");
    curv->add_option("--phi", curv_phi, "Graphing function, e.g. \"x^2 + y^2\"")->required();
    curv->add_option("--at", curv_at, "Point x,y,u");
    curv->add_option("--fiber", curv_fiber, "Fiber point a,b,c,d,e");

    int cc_points = 10;
    auto* cc = app.add_subcommand("check-connection", "Equivariance system, determinant and curvature vanishing");
    cc->add_option("--points", cc_points, "Random points")->check(CLI::PositiveNumber);

    auto* hol = app.add_subcommand("hol-heisenberg", "Infinitesimal automorphisms of the Heisenberg sphere");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return emit(run_verify_identities(id_points, id_full, seed), pretty_output);
        if (*coh) return emit(run_cohomology(load_algebra(coh_algebra), coh_level, coh_h), pretty_output);
        if (*tan) return emit(run_tanaka(load_algebra(tan_algebra), tan_max), pretty_output);
        if (*fl) return emit(run_free_lie(fl_max), pretty_output);
        if (*curv) return emit(run_curvature(curv_phi, point3(curv_at), point5(curv_fiber)), pretty_output);
        if (*cc) return emit(run_check_connection(cc_points, seed), pretty_output);
        if (*hol) return emit(run_hol_heisenberg(), pretty_output);
    } catch (const ParseError& e) {
        return emit_error("ParseError", e.what(), pretty_output, {{"position", e.position}, {"expected", e.expected}});
    } catch (const std::exception& e) {
        return emit_error("Error", e.what(), pretty_output);
    }
    return 2;
}
