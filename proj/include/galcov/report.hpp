#pragma once

#include "galcov/cover.hpp"
#include "galcov/io.hpp"

#include <optional>
#include <string>

namespace galcov {

json arrangement_report(const Arrangement& arr);
json smoothness_report(const CoverSpec& spec);
/// Throws std::domain_error for a singular cover.
json invariants_report(const CoverSpec& spec);
json characters_report(const CoverSpec& spec);
json symmetry_report(const CoverSpec& spec);
/// Smith totals use Hodge data from K^2, e and irregularity 0.
json real_report(const CoverSpec& spec);
/// Verdicts for the given Hodge data; k3 defaults to the range 0..3.
json bounds_report(const HodgeData& h, std::optional<std::int64_t> k3, bool negatively_curved);
json fake_plane_report();

/// Recomputes every bundled reference value and compares with the files in `golden_dir`.
/// The result has "checks" (name, expected, actual, ok) and "mismatches".
json reference_verify(const std::string& golden_dir);

/// Indented "key: value" rendering; arrays of scalars stay on one line.
std::string render_text(const json& report);

}  // namespace galcov
