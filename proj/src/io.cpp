#include "galcov/io.hpp"

#include "galcov/cyclotomic.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace galcov {

namespace {

constexpr std::string_view kBuiltin = "builtin:";

CycNumber parse_coefficient(const json& c) {
    if (c.is_number_integer()) return CycNumber(c.get<std::int64_t>());
    if (c.is_string()) {
        try {
            return CycNumber::parse(c.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(std::string("bad coefficient: ") + e.what());
        }
    }
    throw InputError("coefficient must be an integer or a string, got " + c.dump());
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("field \"") + key + "\": " + e.what());
    }
}

std::size_t resolve_point(const Arrangement& arr, const std::vector<std::size_t>& one_based) {
    std::set<std::size_t> lines;
    for (std::size_t i : one_based) {
        if (i < 1 || i > arr.size()) throw InputError("blow_up line index out of range");
        lines.insert(i - 1);
    }
    if (lines.size() < 2) throw InputError("blow_up entries need at least two lines");
    const std::size_t p = arr.meet(*lines.begin(), *std::next(lines.begin()));
    const auto& incident = arr.points()[p].incident;
    if (std::vector<std::size_t>(lines.begin(), lines.end()) != incident) {
        std::string msg = "blow_up entry";
        for (std::size_t i : one_based) msg += " " + std::to_string(i);
        throw InputError(msg + " is not the full set of lines through a point");
    }
    return p;
}

}  // namespace

std::vector<std::string> builtin_arrangements() { return {"dual_hesse", "complete_quadrilateral"}; }

std::vector<std::string> builtin_covers() { return {"example1", "example2", "example3"}; }

Epimorphism example_phi(int example) {
    switch (example) {
        case 1:
            return {5, 2, {{1, 1}, {1, 0}, {1, 1}, {3, 3}, {3, 0}, {0, 1}, {0, 1}, {0, 2}, {1, 1}}};
        case 2:
            return {5, 2, {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 2}, {1, 2}, {0, 3}}};
        case 3:
            return {5, 2, {{1, 0}, {1, 0}, {1, 2}, {0, 1}, {0, 1}, {2, 1}}};
        default:
            throw InputError("no example " + std::to_string(example));
    }
}

CoverSpec example_cover(int example) {
    CoverSpec spec;
    spec.name = "example" + std::to_string(example);
    spec.phi = example_phi(example);
    spec.arrangement = example == 3 ? complete_quadrilateral() : dual_hesse();
    return spec;
}

Arrangement parse_arrangement(const json& j) {
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        throw InputError("arrangement must be an object with a \"lines\" array");
    std::vector<Line> lines;
    for (const auto& row : j["lines"]) {
        if (!row.is_array() || row.size() != 3) throw InputError("each line needs 3 coefficients");
        Vec3 v{parse_coefficient(row[0]), parse_coefficient(row[1]), parse_coefficient(row[2])};
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) throw InputError("zero line");
        lines.emplace_back(v);
    }
    try {
        return Arrangement::build(std::move(lines));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json arrangement_to_json(const Arrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines()) {
        json row = json::array();
        for (const auto& c : l.coeffs()) row.push_back(c.str());
        lines.push_back(row);
    }
    return json{{"lines", lines}};
}

CoverSpec parse_cover(const json& j) {
    if (!j.is_object()) throw InputError("cover spec must be an object");
    CoverSpec spec;
    spec.name = j.value("name", std::string("cover"));
    if (!j.contains("arrangement")) throw InputError("missing field \"arrangement\"");
    const json& a = j["arrangement"];
    spec.arrangement = a.is_string() ? load_arrangement(a.get<std::string>()) : parse_arrangement(a);
    spec.phi.m = field<int>(j, "m");
    spec.phi.k = field<std::size_t>(j, "k");
    spec.phi.rows = field<std::vector<ModVector>>(j, "phi");
    if (j.contains("blow_up")) {
        const json& b = j["blow_up"];
        if (b.is_string()) {
            if (b.get<std::string>() != "all_r_ge_3") throw InputError("blow_up must be \"all_r_ge_3\" or a list");
        } else if (b.is_array()) {
            std::vector<std::size_t> blown;
            for (const auto& entry : b) {
                if (entry.is_number_integer()) {
                    const auto id = entry.get<std::int64_t>();
                    if (id < 1 || id > static_cast<std::int64_t>(spec.arrangement.points().size()))
                        throw InputError("blow_up point id out of range");
                    blown.push_back(static_cast<std::size_t>(id - 1));
                } else if (entry.is_array()) {
                    blown.push_back(resolve_point(spec.arrangement, entry.get<std::vector<std::size_t>>()));
                } else {
                    throw InputError("blow_up entries are point ids or lists of lines");
                }
            }
            std::sort(blown.begin(), blown.end());
            blown.erase(std::unique(blown.begin(), blown.end()), blown.end());
            spec.blown = blown;
        } else {
            throw InputError("blow_up must be \"all_r_ge_3\" or a list");
        }
    }
    if (spec.phi.rows.size() != spec.arrangement.size())
        throw InputError("phi needs one row per line");
    const auto report = validate_epimorphism(spec.phi);
    if (!report.valid()) {
        std::string msg = "invalid phi:";
        for (const auto& p : report.problems) msg += " " + p + ";";
        throw InputError(msg);
    }
    return spec;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Arrangement load_arrangement(std::string_view ref) {
    if (ref.starts_with(kBuiltin)) {
        const std::string_view id = ref.substr(kBuiltin.size());
        if (id == "dual_hesse") return dual_hesse();
        if (id == "complete_quadrilateral") return complete_quadrilateral();
        for (int e = 1; e <= 3; ++e)
            if (id == "example" + std::to_string(e)) return example_cover(e).arrangement;
        throw InputError("unknown builtin " + std::string(ref));
    }
    const json j = load_json_file(std::string(ref));
    return j.contains("arrangement") ? parse_cover(j).arrangement : parse_arrangement(j);
}

CoverSpec load_cover(std::string_view ref) {
    if (ref.starts_with(kBuiltin)) {
        const std::string_view id = ref.substr(kBuiltin.size());
        for (int e = 1; e <= 3; ++e)
            if (id == "example" + std::to_string(e)) return example_cover(e);
        throw InputError("unknown builtin cover " + std::string(ref));
    }
    return parse_cover(load_json_file(std::string(ref)));
}

HodgeData parse_hodge(const json& j) {
    if (!j.is_object()) throw InputError("Hodge data must be an object");
    HodgeData h;
    h.h10 = field<std::int64_t>(j, "h10");
    h.h20 = field<std::int64_t>(j, "h20");
    h.h11 = field<std::int64_t>(j, "h11");
    h.nu = j.value("nu", std::int64_t{0});
    h.p_minus = j.value("p_minus", std::int64_t{0});
    h.p_plus = j.value("p_plus", h.h11 - 1 - h.p_minus);
    if (j.contains("components")) {
        for (const auto& c : field<std::vector<std::vector<std::int64_t>>>(j, "components")) {
            if (c.size() != 3) throw InputError("component Betti triples need 3 entries");
            h.components.push_back({c[0], c[1], c[2]});
        }
    }
    const auto problems = h.problems();
    if (!problems.empty()) throw InputError("inconsistent Hodge data: " + problems.front());
    return h;
}

json hodge_to_json(const HodgeData& h) {
    json comps = json::array();
    for (const auto& c : h.components) comps.push_back({c[0], c[1], c[2]});
    return json{{"h10", h.h10}, {"h20", h.h20}, {"h11", h.h11},     {"nu", h.nu},
                {"p_plus", h.p_plus}, {"p_minus", h.p_minus}, {"components", comps}};
}

}  // namespace galcov
