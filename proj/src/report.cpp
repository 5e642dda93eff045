#include "galcov/report.hpp"

#include "galcov/characters.hpp"
#include "galcov/symmetry.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

namespace galcov {

namespace {

json one_based(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(i + 1);
    return out;
}

json point_lines(const Arrangement& arr, std::size_t p) { return one_based(arr.points()[p].incident); }

json matrix_json(const Matrix3& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(to_string(r));
    return rows;
}

json multiplicity_json(const Arrangement& arr) {
    json t = json::object();
    for (const auto& [r, count] : arr.multiplicities()) t[std::to_string(r)] = count;
    return t;
}

CoverModel build_cover(const CoverSpec& spec) {
    try {
        return CoverModel::build(spec.arrangement, spec.phi, spec.blown);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json element_json(const KleinModel& model, const KleinElement& e) {
    return json{{"symmetry", model.symmetries.at(e.sym).symmetry.str()}, {"g", e.g}};
}

json curve_summary(const InvariantReport& r, BranchComponent::Kind kind) {
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> seen;
    for (const auto& c : r.curves)
        if (c.kind == kind) seen.insert({c.self_intersection, c.canonical_degree, c.genus, c.components});
    json out = json::array();
    for (const auto& [c2, ck, g, comps] : seen)
        out.push_back({{"self_intersection", c2}, {"canonical_degree", ck}, {"genus", g}, {"components", comps}});
    return out.size() == 1 ? out[0] : out;
}

bool is_minus_identity(const ModMatrix& a, int m) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? mod(-1, m) : 0)) return false;
    return true;
}

bool is_identity_matrix(const Matrix3& m) { return proportional(m, identity_matrix()); }

}  // namespace

json arrangement_report(const Arrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines()) lines.push_back(to_string(l.coeffs()));
    json points = json::array();
    for (std::size_t p = 0; p < arr.points().size(); ++p) {
        const auto& pt = arr.points()[p];
        if (pt.multiplicity() < 3) continue;
        points.push_back({{"lines", point_lines(arr, p)}, {"coords", to_string(pt.coords)}});
    }
    json profiles = json::array();
    for (std::size_t i = 0; i < arr.size(); ++i) profiles.push_back(arr.profile(i));
    return json{{"lines", lines},
                {"multiplicities", multiplicity_json(arr)},
                {"points", arr.points().size()},
                {"multiple_points", points},
                {"line_profiles", profiles},
                {"automorphisms", combinatorial_automorphisms(arr).size()}};
}

json smoothness_report(const CoverSpec& spec) {
    const CoverModel cover = build_cover(spec);
    const auto& arr = cover.arrangement();
    json blown = json::array();
    for (std::size_t p : cover.blown()) blown.push_back(point_lines(arr, p));
    json checks = json::array();
    for (const auto& c : cover.certificate().checks) {
        checks.push_back({{"point", point_lines(arr, c.point)},
                          {"blown", c.blown},
                          {"line", c.line + 1},
                          {"first", c.first},
                          {"second", c.second},
                          {"independent", c.independent}});
    }
    return json{{"cover", spec.name},
                {"m", spec.phi.m},
                {"k", spec.phi.k},
                {"degree", cover.degree()},
                {"blown", blown},
                {"smooth", cover.smooth()},
                {"failures", cover.certificate().failures},
                {"checks", checks}};
}

json invariants_report(const CoverSpec& spec) {
    const CoverModel cover = build_cover(spec);
    const InvariantReport r = invariants(cover);
    json curves = json::array();
    for (const auto& c : r.curves) {
        curves.push_back({{"label", c.label},
                          {"ramification", c.ramification},
                          {"self_intersection", c.self_intersection},
                          {"canonical_degree", c.canonical_degree},
                          {"components", c.components},
                          {"genus", c.genus}});
    }
    json out{{"cover", spec.name},
             {"degree", r.degree},
             {"k_squared", r.k_squared},
             {"euler", r.euler},
             {"chi", r.chi.str()},
             {"k_squared_minus_3e", r.my_defect},
             {"canonical_on_base", r.canonical_on_base.str()},
             {"curves", curves}};
    if (!cover.branch().empty()) {
        const auto d = three_canonical_decomposition(cover);
        json coeffs = json::object();
        for (std::size_t i = 0; i < cover.branch().size(); ++i)
            coeffs[cover.branch()[i].label(cover.arrangement())] = d.curve_coeffs[i].str();
        out["three_canonical"] = {{"base_line_coefficient", d.line_coeff.str()},
                                  {"base_identity", d.base_identity},
                                  {"coefficients", coeffs},
                                  {"integral", d.integral},
                                  {"all_positive", d.all_positive}};
    }
    return out;
}

json characters_report(const CoverSpec& spec) {
    const CoverModel cover = build_cover(spec);
    const CharacterSet set = enumerate_characters(spec.phi);
    json unique = json::array();
    for (const auto& a : unique_profile_elements(set))
        unique.push_back({{"character", a}, {"profile", r_profile(a, set.m)}});
    json words = json::array();
    for (const auto& w : generator_words(spec.phi)) words.push_back(word_string(w));
    return json{{"cover", spec.name},
                {"m", set.m},
                {"size", set.size()},
                {"generators", words},
                {"characters", set.elements},
                {"unique_profiles", unique}};
}

json symmetry_report(const CoverSpec& spec) {
    const CoverModel cover = build_cover(spec);
    const auto& arr = cover.arrangement();
    const CharacterSet set = enumerate_characters(spec.phi);
    json preserving = json::array();
    for (const auto& p : character_preserving_symmetries(arr, set)) preserving.push_back(cycle_string(p));
    const KleinModel model = klein_model(cover);
    json realized = json::array();
    for (const auto& s : model.symmetries) {
        realized.push_back({{"symmetry", s.symmetry.str()},
                            {"matrix", matrix_json(*s.symmetry.matrix)},
                            {"deck_action", s.action}});
    }
    json unrealized = json::array();
    for (const auto& p : model.combinatorial_only) unrealized.push_back(cycle_string(p));
    return json{{"cover", spec.name},
                {"automorphisms", combinatorial_automorphisms(arr).size()},
                {"character_preserving", preserving},
                {"realized", realized},
                {"combinatorial_only", unrealized},
                {"klein_order", model.order()},
                {"has_anti", model.has_anti()}};
}

json real_report(const CoverSpec& spec) {
    const CoverModel cover = build_cover(spec);
    const auto& arr = cover.arrangement();
    const KleinModel model = klein_model(cover);
    std::optional<std::int64_t> smith;
    if (cover.smooth()) {
        const InvariantReport inv = invariants(cover);
        smith = smith_total(hodge_from_invariants(inv.k_squared, inv.euler, 0));
    }
    json classes = json::array();
    for (const auto& c : classify_real_structures(cover, model)) {
        json centers = json::array();
        for (std::size_t p : c.real_blown_centers) centers.push_back(point_lines(arr, p));
        json entry{{"representative", element_json(model, c.representative)},
                   {"class_size", c.class_size},
                   {"real_lines", one_based(c.real_lines)},
                   {"real_blown_centers", centers}};
        if (c.topology) {
            entry["real_part"] = {{"euler", c.topology->euler},
                                  {"betti", c.topology->betti},
                                  {"betti_total", c.topology->total()}};
            if (smith) entry["maximal"] = c.topology->total() == *smith;
        } else {
            entry["real_part"] = nullptr;
        }
        classes.push_back(entry);
    }
    json out{{"cover", spec.name}, {"klein_order", model.order()}, {"anti_classes", classes.size()}};
    out["smith_total"] = smith ? json(*smith) : json(nullptr);
    out["classes"] = classes;
    return out;
}

json fake_plane_report() {
    const FakePlaneReport r = fake_plane_involution_check();
    json samples = json::array();
    for (const auto& [ratio, values] : r.fixed_curve_samples)
        samples.push_back({{"r", ratio.str()}, {"euler", values.first.str()}, {"twice_self_intersection", values.second.str()}});
    return json{{"fixed_curve_samples", samples},
                {"fixed_curve_excluded", r.fixed_curve_excluded},
                {"lefschetz_number", r.lefschetz_number},
                {"det_at_fixed_point", r.det_at_fixed_point.str()},
                {"holomorphic_sum", r.holomorphic_sum.str()},
                {"holomorphic_expected", r.holomorphic_expected.str()},
                {"contradiction", r.contradiction},
                {"steps", r.steps}};
}

json bounds_report(const HodgeData& h, std::optional<std::int64_t> k3, bool negatively_curved) {
    json out{{"hodge", hodge_to_json(h)},
             {"smith_total", smith_total(h)},
             {"real_betti_total", real_betti_total(h)},
             {"maximal", is_maximal(h)},
             {"my_identity", my_identity(h)}};
    try {
        out["trace"] = lefschetz_relation(h);
    } catch (const std::domain_error& e) {
        out["trace"] = nullptr;
        out["trace_error"] = e.what();
    }
    if (is_maximal(h)) {
        std::int64_t beta1 = 0;
        for (const auto& c : h.components) beta1 += c[1];
        out["beta1"] = {{"real_part", beta1}, {"smith_and_trace", maximal_beta1(h)}};
        if (my_identity(h)) out["beta1"]["miyaoka_yau_form"] = maximal_beta1_my(h);
    }
    if (my_identity(h)) {
        out["h20_lower_bound"] = h20_lower_bound(h);
        out["h20_bound_satisfied"] = h.h20 >= h20_lower_bound(h);
    }
    std::vector<std::int64_t> k3s;
    if (k3) {
        k3s.push_back(*k3);
    } else {
        for (std::int64_t i = 0; i <= 3; ++i) k3s.push_back(i);
    }
    json verdicts = json::array();
    for (std::int64_t v : k3s) {
        const auto b = crosscap_component_bound(h, v);
        verdicts.push_back({{"k3", v},
                            {"lhs", b.lhs},
                            {"rhs", b.rhs},
                            {"feasible", b.feasible},
                            {"boundary", b.boundary},
                            {"reduced", b.reduced}});
    }
    out["three_crosscap_components"] = verdicts;
    json comps = json::array();
    for (const auto& c : h.components) {
        const auto v = small_component_exclusion(c, negatively_curved);
        comps.push_back({{"betti", c},
                         {"verdict", v == ComponentVerdict::rejected   ? "rejected"
                                     : v == ComponentVerdict::accepted ? "accepted"
                                                                       : "not_applicable"}});
    }
    out["components"] = comps;
    return out;
}

namespace {

json reproduce_arrangement(const Arrangement& arr) {
    json triples = json::array();
    for (std::size_t p = 0; p < arr.points().size(); ++p)
        if (arr.points()[p].multiplicity() == 3) triples.push_back(point_lines(arr, p));
    std::set<std::size_t> per_line;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t p : arr.points_on(i)) count += arr.points()[p].multiplicity() == 3;
        per_line.insert(count);
    }
    json per = json::array();
    for (std::size_t c : per_line) per.push_back(c);
    json t = json::array();
    for (const auto& [r, count] : arr.multiplicities()) t.push_back({r, count});
    return json{{"multiplicities", t},
                {"triple_points", triples},
                {"triple_points_per_line", per.size() == 1 ? per[0] : per},
                {"automorphisms", combinatorial_automorphisms(arr).size()}};
}

json reproduce_example(int example, const json& golden) {
    const CoverSpec spec = example_cover(example);
    const CoverModel cover = build_cover(spec);
    const auto& arr = cover.arrangement();
    const InvariantReport inv = invariants(cover);
    json out{{"smooth", cover.smooth()},
             {"k_squared", inv.k_squared},
             {"euler", inv.euler},
             {"chi", inv.chi.str()},
             {"k_squared_minus_3e", inv.my_defect},
             {"line_curves", curve_summary(inv, BranchComponent::Kind::line)},
             {"exceptional_curves", curve_summary(inv, BranchComponent::Kind::exceptional)}};
    const auto d = three_canonical_decomposition(cover);
    std::set<std::string> line_coeffs, exc_coeffs;
    for (std::size_t i = 0; i < cover.branch().size(); ++i)
        (cover.branch()[i].kind == BranchComponent::Kind::line ? line_coeffs : exc_coeffs)
            .insert(d.curve_coeffs[i].str());
    out["three_canonical"] = {{"line_curves", line_coeffs}, {"exceptional_curves", exc_coeffs}};

    const CharacterSet set = enumerate_characters(spec.phi);
    out["characters"] = set.elements;
    if (golden.contains("designated")) {
        json designated = json::array();
        const auto unique = unique_profile_elements(set);
        for (const auto& g : golden["designated"]) {
            const Character a = g.at("character").get<Character>();
            designated.push_back({{"character", a},
                                  {"profile", r_profile(a, set.m)},
                                  {"unique", std::find(unique.begin(), unique.end(), a) != unique.end()}});
        }
        out["designated"] = designated;
    }

    json preserving = json::array();
    for (const auto& p : character_preserving_symmetries(arr, set)) preserving.push_back(cycle_string(p));
    out["character_preserving"] = preserving;

    const KleinModel model = klein_model(cover);
    out["klein_order"] = model.order();
    json realized = json::array();
    for (const auto& s : model.symmetries) {
        realized.push_back({{"symmetry", s.symmetry.str()},
                            {"identity_matrix", is_identity_matrix(*s.symmetry.matrix)},
                            {"deck_inversion", is_minus_identity(s.action, model.m)}});
    }
    out["realized"] = realized;

    const auto smith = smith_total(hodge_from_invariants(inv.k_squared, inv.euler, 0));
    out["smith_total"] = smith;
    json classes = json::array();
    for (const auto& c : classify_real_structures(cover, model)) {
        json entry{{"class_size", c.class_size},
                   {"real_lines", one_based(c.real_lines)},
                   {"real_blown_centers", c.real_blown_centers.size()}};
        if (c.topology) {
            entry["real_betti_total"] = c.topology->total();
            entry["maximal"] = c.topology->total() == smith;
        }
        classes.push_back(entry);
    }
    out["real_classes"] = classes;
    return out;
}

json reproduce_bounds() {
    const InvariantReport inv = invariants(build_cover(example_cover(1)));
    const HodgeData h1 = hodge_from_invariants(inv.k_squared, inv.euler, 0);
    HodgeData my;
    my.h11 = 1;
    json crosscap = json::array();
    for (std::int64_t k3 = 0; k3 < 3; ++k3) {
        bool any_feasible = false;
        // every maximal MY surface: h11 = h20 + 1 and p_plus + p_minus = h11 - 1
        for (std::int64_t h20 = 0; h20 <= 40; ++h20) {
            HodgeData h;
            h.h20 = h20;
            h.h11 = h20 + 1;
            for (h.p_minus = 0; h.p_minus <= h.h11 - 1; ++h.p_minus) {
                h.p_plus = h.h11 - 1 - h.p_minus;
                any_feasible = any_feasible || crosscap_component_bound(h, k3).feasible;
            }
        }
        crosscap.push_back({{"k3", k3}, {"feasible", any_feasible}});
    }
    return json{{"example1_hodge", {{"h10", h1.h10}, {"h20", h1.h20}, {"h11", h1.h11}}},
                {"example1_smith_total", smith_total(h1)},
                {"h20_lower_bound", h20_lower_bound(my)},
                {"three_crosscap_components", crosscap},
                {"fake_plane", fake_plane_report()},
                {"diophantine_7_12_27", invariant_curve_filter({7, 12}, 27).size()}};
}

void compare(const std::string& path, const json& expected, const json& actual, json& checks) {
    if (expected.is_object()) {
        for (const auto& [key, value] : expected.items()) {
            const json missing;
            compare(path.empty() ? key : path + "." + key, value,
                    actual.is_object() && actual.contains(key) ? actual[key] : missing, checks);
        }
        return;
    }
    checks.push_back({{"name", path}, {"expected", expected}, {"actual", actual}, {"ok", expected == actual}});
}

json characters_file(const std::filesystem::path& path) {
    return load_json_file(path.string()).at("characters");
}

}  // namespace

json reference_verify(const std::string& golden_dir) {
    const std::filesystem::path dir(golden_dir);
    json golden = load_json_file((dir / "reference.json").string());
    for (const auto& [example, file] : {std::pair{"example1", "a1.json"}, std::pair{"example2", "a2.json"}}) {
        if (std::filesystem::exists(dir / file)) golden[example]["characters"] = characters_file(dir / file);
    }

    json actual{{"dual_hesse", reproduce_arrangement(dual_hesse())},
                {"complete_quadrilateral", reproduce_arrangement(complete_quadrilateral())}};
    for (int e = 1; e <= 3; ++e) {
        const std::string key = "example" + std::to_string(e);
        actual[key] = reproduce_example(e, golden.value(key, json::object()));
    }
    actual["bounds"] = reproduce_bounds();

    json checks = json::array();
    compare("", golden, actual, checks);
    std::size_t mismatches = 0;
    for (const auto& c : checks) mismatches += !c["ok"].get<bool>();
    return json{{"checks", checks}, {"total", checks.size()}, {"mismatches", mismatches}};
}

namespace {

bool scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured() && !scalar_array(x)) return false;
    return true;
}

void render(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !scalar_array(value) && !value.empty()) {
                os << pad << key << ":\n";
                render(os, value, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object()) {
                os << pad << "-\n";
                render(os, item, indent + 1);
            } else {
                os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

}  // namespace galcov
