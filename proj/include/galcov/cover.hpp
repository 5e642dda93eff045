#pragma once

#include "galcov/arrangement.hpp"
#include "galcov/homology.hpp"
#include "galcov/intersection.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galcov {

/// A curve of the branch locus on the blown-up plane: a strict transform L'_i or an
/// exceptional curve E_p. Its preimage in X is C_i or D_p respectively.
struct BranchComponent {
    enum class Kind { line, exceptional };
    Kind kind = Kind::line;
    std::size_t index = 0;  // line index or point index
    ModVector meridian;     // phi of the loop around the component
    int ramification = 1;   // order of `meridian` in (Z/m)^k
    DivisorClass cls{{}};

    std::string label(const Arrangement& arr) const;
};

/// Abelian cover X -> (blown-up plane) determined by an arrangement, a blow-up set and phi.
class CoverModel {
public:
    /// Throws std::invalid_argument for an invalid phi or mismatched sizes. `blown`
    /// defaults to every point of multiplicity >= 3.
    static CoverModel build(Arrangement arr, Epimorphism phi,
                            std::optional<std::vector<std::size_t>> blown = std::nullopt);

    const Arrangement& arrangement() const { return arr_; }
    const Epimorphism& phi() const { return phi_; }
    const std::vector<std::size_t>& blown() const { return blown_; }
    const SmoothnessCertificate& certificate() const { return cert_; }
    const DeckGroup& deck() const { return deck_; }
    /// Components with nontrivial ramification: lines first, then exceptional curves.
    const std::vector<BranchComponent>& branch() const { return branch_; }
    std::size_t degree() const { return deck_.order(); }
    bool smooth() const { return cert_.smooth(); }

    /// Throws std::domain_error naming the first failure when the cover is not smooth.
    void require_smooth() const;

private:
    Arrangement arr_;
    Epimorphism phi_;
    std::vector<std::size_t> blown_;
    SmoothnessCertificate cert_;
    DeckGroup deck_;
    std::vector<BranchComponent> branch_;
};

/// Q-class on the blown-up plane whose pull-back is K_X: K + sum (1 - 1/e_c) B_c.
DivisorClass cover_canonical(const CoverModel& cover);

struct CurveInvariants {
    std::string label;
    BranchComponent::Kind kind = BranchComponent::Kind::line;
    std::size_t index = 0;
    int ramification = 1;
    std::int64_t self_intersection = 0;  // of the full preimage
    std::int64_t canonical_degree = 0;   // (C, K_X)
    std::int64_t components = 1;         // connected components of the preimage
    std::int64_t genus = 0;              // of each component
};

struct InvariantReport {
    std::int64_t degree = 0;
    std::int64_t k_squared = 0;
    std::int64_t euler = 0;
    Rational chi;  // (K^2 + e) / 12
    std::int64_t my_defect = 0;  // K^2 - 3e
    DivisorClass canonical_on_base{{}};
    std::int64_t complement_euler = 0;
    std::int64_t branch_points = 0;  // pairwise intersections of branch curves
    std::vector<CurveInvariants> curves;
};

/// Numeric invariants of a smooth cover. Throws std::domain_error for a singular cover or
/// when some point lies on more than two branch curves.
InvariantReport invariants(const CoverModel& cover);

struct ThreeCanonicalDecomposition {
    Rational line_coeff;                     // x in 3K = x * sum L'_i + sum y_p E_p
    std::vector<Rational> exceptional_base;  // y_p per blown point
    bool base_identity = false;              // 3K = -sum L'_i exactly
    std::vector<Rational> curve_coeffs;      // coefficient of each branch curve in 3K_X, branch() order
    bool integral = false;
    bool all_positive = false;
};

/// Writes 3K_X as a combination of the branch curves C_i, D_p using the uniform-line ansatz
/// 3K = -(9/n) sum L'_i + sum y_p E_p on the base. Throws std::domain_error without branch curves.
ThreeCanonicalDecomposition three_canonical_decomposition(const CoverModel& cover);

/// All non-negative integer vectors x with sum coeffs[i]*x[i] == target, lexicographic.
/// Throws std::invalid_argument for non-positive coefficients.
std::vector<std::vector<std::int64_t>> invariant_curve_filter(const std::vector<std::int64_t>& coeffs,
                                                              std::int64_t target);

/// Exponent vectors of w_j^m in l_1..l_n, one per generator.
std::vector<ModVector> generator_words(const Epimorphism& phi);
/// "l1 l2 l3 l4^3 ..." for an exponent vector.
std::string word_string(const ModVector& exponents);

}  // namespace galcov
