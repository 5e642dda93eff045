#include "galcov/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifndef GALCOV_GOLDEN_DIR
#define GALCOV_GOLDEN_DIR "data/golden"
#endif

namespace {

using galcov::json;

int emit(const json& report, const std::string& format, const std::string& out_path) {
    const std::string text = format == "json" ? report.dump(2) + "\n" : galcov::render_text(report);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian covers of the plane branched along line arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write the report to a file");

    std::string ref;
    std::string golden_dir = GALCOV_GOLDEN_DIR;
    std::string hodge_path;
    std::optional<std::int64_t> k3;
    bool negatively_curved = false;

    auto* arrangement = app.add_subcommand("arrangement", "Line arrangements")->require_subcommand(1);
    auto* arr_info = arrangement->add_subcommand("info", "Incidence data and automorphism count");
    arr_info->add_option("arrangement", ref, "builtin:<id> or JSON file")->required();

    auto* cover = app.add_subcommand("cover", "Covers given by an epimorphism")->require_subcommand(1);
    auto* cover_smooth = cover->add_subcommand("smoothness", "Local smoothness certificate");
    auto* cover_inv = cover->add_subcommand("invariants", "K^2, Euler number and branch curves");
    for (auto* sub : {cover_smooth, cover_inv}) sub->add_option("cover", ref, "builtin:<id> or JSON file")->required();

    auto* characters = app.add_subcommand("characters", "Character sets")->require_subcommand(1);
    auto* chars_list = characters->add_subcommand("list", "Characters of the cover");
    chars_list->add_option("cover", ref, "builtin:<id> or JSON file")->required();

    auto* symmetry = app.add_subcommand("symmetry", "Symmetries of the cover")->require_subcommand(1);
    auto* sym_search = symmetry->add_subcommand("search", "Character-preserving symmetries and Kl(X)");
    sym_search->add_option("cover", ref, "builtin:<id> or JSON file")->required();

    auto* real = app.add_subcommand("real", "Real structures")->require_subcommand(1);
    auto* real_classify = real->add_subcommand("classify", "Anti-holomorphic involutions up to conjugation");
    real_classify->add_option("cover", ref, "builtin:<id> or JSON file")->required();

    auto* bounds = app.add_subcommand("bounds", "Real surface bounds")->require_subcommand(1);
    auto* bounds_check = bounds->add_subcommand("check", "Smith, Lefschetz and component verdicts");
    bounds_check->add_option("hodge", hodge_path, "Hodge data JSON file");
    bounds_check->add_option("--k3", k3, "Number of components with three cross-caps");
    bounds_check->add_flag("--negatively-curved", negatively_curved, "Surface is a ball quotient");
    bool fake_plane = false;
    bounds_check->add_flag("--fake-plane", fake_plane, "Run the fake projective plane involution check");

    auto* paper = app.add_subcommand("paper", "Reference reproduction")->require_subcommand(1);
    auto* reference_verify = paper->add_subcommand("verify", "Recompute all reference values and diff with golden files");
    reference_verify->add_option("--golden", golden_dir, "Directory with golden files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*arr_info) return emit(galcov::arrangement_report(galcov::load_arrangement(ref)), format, out_path);
        if (*cover_smooth) return emit(galcov::smoothness_report(galcov::load_cover(ref)), format, out_path);
        if (*cover_inv) return emit(galcov::invariants_report(galcov::load_cover(ref)), format, out_path);
        if (*chars_list) return emit(galcov::characters_report(galcov::load_cover(ref)), format, out_path);
        if (*sym_search) return emit(galcov::symmetry_report(galcov::load_cover(ref)), format, out_path);
        if (*real_classify) return emit(galcov::real_report(galcov::load_cover(ref)), format, out_path);
        if (*bounds_check) {
            if (fake_plane && hodge_path.empty()) return emit(galcov::fake_plane_report(), format, out_path);
            if (hodge_path.empty()) throw galcov::InputError("bounds check needs a Hodge data file or --fake-plane");
            json report = galcov::bounds_report(galcov::parse_hodge(galcov::load_json_file(hodge_path)), k3,
                                                negatively_curved);
            if (fake_plane) report["fake_plane"] = galcov::fake_plane_report();
            return emit(report, format, out_path);
        }
        if (*reference_verify) {
            const json report = galcov::reference_verify(golden_dir);
            const int rc = emit(report, format, out_path);
            if (rc != 0) return rc;
            return report["mismatches"].get<std::size_t>() == 0 ? 0 : 1;
        }
    } catch (const galcov::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const galcov::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
