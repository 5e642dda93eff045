#pragma once

#include "galcov/arrangement.hpp"
#include "galcov/modular.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace galcov {

/// phi : H1(P^2 \ L) -> (Z/m)^k given on the meridians: rows[i] = phi(lambda_{i+1}).
struct Epimorphism {
    int m = 0;
    std::size_t k = 0;
    std::vector<ModVector> rows;

    std::size_t n() const { return rows.size(); }
    /// Column j as an n-vector: the exponents of w_{j+1}^m in the line equations.
    ModVector column(std::size_t j) const;
    /// phi applied to an integral combination of meridians.
    ModVector apply(const std::vector<int>& combination) const;
};

struct EpimorphismReport {
    bool zero_sum = false;
    bool surjective = false;
    std::vector<std::string> problems;
    bool valid() const { return problems.empty(); }
};

/// Checks shapes, entries in range, the relation sum(lambda_i) = 0 and surjectivity.
/// m = 1 is accepted as the degenerate unbranched cover; other moduli must be prime.
EpimorphismReport validate_epimorphism(const Epimorphism& phi);
/// Throws std::invalid_argument listing the problems if phi is not valid.
void require_valid(const Epimorphism& phi);

/// Class of the loop around the exceptional curve over a point: sum of incident meridians.
std::vector<int> eps_class(const IncidencePoint& point, std::size_t n);

/// The vectors generate a subgroup isomorphic to (Z/m)^r. Requires m prime.
bool independence(const std::vector<ModVector>& vecs, std::size_t r, int m);

/// Indices of points of multiplicity >= 3.
std::vector<std::size_t> default_blowup(const Arrangement& arr);

struct SmoothnessCheck {
    std::size_t point = 0;
    bool blown = false;
    /// For blown points the line paired with phi(eps_p); for double points the second line.
    std::size_t line = 0;
    ModVector first;
    ModVector second;
    bool independent = false;
    std::string note;
};

struct SmoothnessCertificate {
    std::vector<SmoothnessCheck> checks;
    std::vector<std::string> failures;
    bool smooth() const { return failures.empty(); }
};

/// Local smoothness of the cover over every singular point of the arrangement:
/// unblown double points need phi(lambda_i), phi(lambda_j) independent; blown points need
/// each pair phi(eps_p), phi(lambda_i) independent; unblown points with r >= 3 fail.
SmoothnessCertificate smoothness_check(const Arrangement& arr, const Epimorphism& phi,
                                       const std::vector<std::size_t>& blown);

/// Deck group (Z/m)^k of the cover as the quotient of the Fermat group H1 (x) Z/m by the
/// kernel H = Gal(K_u / K_phi). Fermat-group elements are written gamma = (gamma_1..gamma_{n-1})
/// (the representative with gamma_n = 0), so membership in H is the system
/// sum_{i<n} a_{i,j} gamma_i = 0 (mod m), one congruence per column j.
struct DeckGroup {
    int m = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<ModVector> congruences;  // k rows of length n-1
    std::vector<ModVector> kernel_basis;  // basis of H over Z/m

    std::size_t order() const;         // m^k
    std::size_t kernel_order() const;  // m^(n-1-k)
    /// Image of a Fermat-group element in (Z/m)^k.
    ModVector image(const ModVector& gamma) const;
    bool in_kernel(const ModVector& gamma) const;
};

/// Throws std::invalid_argument for an invalid phi or a composite modulus.
DeckGroup galois_kernel(const Epimorphism& phi);

}  // namespace galcov
