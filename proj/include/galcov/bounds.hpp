#pragma once

#include "galcov/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galcov {

using BettiTriple = std::array<std::int64_t, 3>;

/// Hodge numbers of a surface plus the split of the primitive part of H^{1,1} under a real
/// structure and the Z/2-Betti numbers of the real components.
struct HodgeData {
    std::int64_t h10 = 0;
    std::int64_t h20 = 0;
    std::int64_t h11 = 0;
    std::int64_t nu = 0;  // rank of the 2-torsion of H_1(X; Z)
    std::int64_t p_plus = 0;
    std::int64_t p_minus = 0;
    std::vector<BettiTriple> components;

    /// Empty when consistent; otherwise the violated constraints.
    std::vector<std::string> problems() const;
};

/// Hodge data of a surface with the given K^2, e and irregularity; p_plus = h11 - 1, p_minus = 0.
/// Throws std::domain_error when Noether's formula does not give an integer.
HodgeData hodge_from_invariants(std::int64_t k_squared, std::int64_t euler, std::int64_t irregularity);

/// Sum of the Z/2-Betti numbers of the complex surface: 2 + 4(h10 + nu) + 2 h20 + h11.
std::int64_t smith_total(const HodgeData& h);
std::int64_t real_betti_total(const HodgeData& h);
bool is_maximal(const HodgeData& h);

/// tr P^{1,1} = sum (b0 - b1 + b2) - 1 over the real components.
/// Throws std::domain_error when |trace| > h11 - 1.
std::int64_t lefschetz_relation(const HodgeData& h);

/// b1 of the real part of a maximal real surface, from the Smith equality and the trace formula.
std::int64_t maximal_beta1(const HodgeData& h);
/// The same value after substituting h11 = h20 + h10 + 1.
std::int64_t maximal_beta1_my(const HodgeData& h);

bool my_identity(const HodgeData& h);

/// Lower bound 2 nu + 5 p_plus + 4 on h20 for a maximal real MY surface.
/// Throws std::domain_error when the MY identity fails.
std::int64_t h20_lower_bound(const HodgeData& h);

struct ComponentBoundVerdict {
    std::int64_t lhs = 0;  // h11 + h10 + 2nu + p_minus
    std::int64_t rhs = 0;  // 2h11 + 2h10 + 4nu + 2p_plus + 2 - k3
    bool feasible = false;
    bool boundary = false;  // feasible with equality
    std::int64_t minimum_k3 = 0;  // 3 + h10 + 2nu, the least k3 for which any p_minus <= h11 - 1 works
    std::string reduced;          // the inequality after eliminating p_plus
};

/// Inequality forced on a maximal real MY surface with k3 components diffeomorphic to a
/// sphere with three cross-caps and every other component having b1 >= 4.
ComponentBoundVerdict crosscap_component_bound(const HodgeData& h, std::int64_t k3);

enum class ComponentVerdict { rejected, accepted, not_applicable };

/// Real components with b1 <= 2 (sphere, RP^2, torus, Klein bottle) cannot occur on a
/// negatively curved compact Kahler surface.
ComponentVerdict small_component_exclusion(const BettiTriple& component, bool negatively_curved);

struct FakePlaneReport {
    // fixed curve C = rK: 2C^2 versus e(C) from adjunction, sampled at r = 1/3 and r = 1
    std::vector<std::pair<Rational, std::pair<Rational, Rational>>> fixed_curve_samples;
    bool fixed_curve_excluded = false;
    std::int64_t lefschetz_number = 0;
    Rational det_at_fixed_point;
    Rational holomorphic_sum;
    Rational holomorphic_expected;
    bool contradiction = false;
    std::vector<std::string> steps;
};

/// Involution on a surface with b0=b2=b4=1, b1=b3=0, K^2=9, p_g=q=0.
FakePlaneReport fake_plane_involution_check();

}  // namespace galcov
