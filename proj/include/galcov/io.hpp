#pragma once

#include "galcov/arrangement.hpp"
#include "galcov/bounds.hpp"
#include "galcov/homology.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

/// Malformed or unreadable user input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

/// Everything needed to build a CoverModel.
struct CoverSpec {
    std::string name;
    Arrangement arrangement;
    Epimorphism phi;
    std::optional<std::vector<std::size_t>> blown;
};

/// Builtin ids: "dual_hesse", "complete_quadrilateral".
std::vector<std::string> builtin_arrangements();
/// Builtin ids: "example1", "example2", "example3".
std::vector<std::string> builtin_covers();

Epimorphism example_phi(int example);
CoverSpec example_cover(int example);

/// {"lines": [[c0, c1, c2], ...]}; coefficients are integers or strings like "1+2*z".
Arrangement parse_arrangement(const json& j);
json arrangement_to_json(const Arrangement& arr);

/// {"arrangement": <ref or object>, "m": 5, "k": 2, "phi": [[...], ...],
///  "blow_up": "all_r_ge_3" | [[1, 2, 3], 7, ...]}. A blown point is either the 1-based list of
/// its lines or its 1-based index in the arrangement's point order. Default: "all_r_ge_3".
CoverSpec parse_cover(const json& j);

/// "builtin:<id>" or a path to a JSON file.
Arrangement load_arrangement(std::string_view ref);
/// "builtin:<id>" (arrangements give no cover) or a path to a JSON file.
CoverSpec load_cover(std::string_view ref);
json load_json_file(const std::string& path);

/// {"h10", "h20", "h11", "nu", "p_plus", "p_minus", "components": [[b0, b1, b2], ...]}.
/// Missing p_plus/p_minus default to p_plus = h11 - 1 - p_minus, p_minus = 0.
HodgeData parse_hodge(const json& j);
json hodge_to_json(const HodgeData& h);

}  // namespace galcov
