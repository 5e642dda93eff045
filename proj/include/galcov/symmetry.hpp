#pragma once

#include "galcov/arrangement.hpp"
#include "galcov/characters.hpp"
#include "galcov/cover.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace galcov {

/// Combinatorial automorphisms of the arrangement whose coordinate action a -> a o perm
/// maps the character set onto itself.
std::vector<Permutation> character_preserving_symmetries(const Arrangement& arr, const CharacterSet& chars);

/// Automorphism g -> s g s^{-1} of the deck group (Z/m)^k induced by a lift of `sym`,
/// written in the basis dual to the generators w_j: eps * P^T with eps = -1 for anti
/// symmetries and w^c -> w^{Pc} the action on characters.
/// Throws std::invalid_argument if the permutation does not preserve the character set.
ModMatrix deck_action_of(const LineSymmetry& sym, const Epimorphism& phi);

ModVector apply(const ModMatrix& a, const ModVector& v, int m);
ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, int m);
ModMatrix identity_mod(std::size_t k);

/// Element g o s of Kl(X): the lift of symmetry number `sym` followed by deck transformation g.
struct KleinElement {
    std::size_t sym = 0;
    ModVector g;
    friend auto operator<=>(const KleinElement&, const KleinElement&) = default;
};

struct ExternalSymmetry {
    LineSymmetry symmetry;
    ModMatrix action;  // deck_action_of(symmetry)
};

/// Finite model of Kl(X) as the semidirect product of the deck group with the realized
/// character-preserving arrangement symmetries.
class KleinModel {
public:
    int m = 0;
    std::size_t k = 0;
    std::vector<ExternalSymmetry> symmetries;  // index 0 is the identity
    /// Character-preserving permutations with no (anti-)projective realization at all.
    std::vector<Permutation> combinatorial_only;

    std::size_t deck_order() const;
    std::size_t order() const { return deck_order() * symmetries.size(); }
    bool has_anti() const;

    KleinElement identity() const;
    KleinElement multiply(const KleinElement& a, const KleinElement& b) const;
    KleinElement inverse(const KleinElement& a) const;
    bool is_anti(const KleinElement& a) const { return symmetries.at(a.sym).symmetry.anti; }
    /// All elements, ordered by symmetry index then deck vector.
    std::vector<KleinElement> elements() const;
    /// Index of the symmetry with this permutation and anti flag.
    std::optional<std::size_t> find(const Permutation& perm, bool anti) const;

    /// Builds the index used by find(); call after filling `symmetries`.
    void reindex();

private:
    std::map<std::pair<Permutation, bool>, std::size_t> index_;
};

KleinModel klein_model(const CoverModel& cover);

struct RealTopology {
    std::int64_t euler = 0;
    std::array<std::int64_t, 3> betti{};  // Z/2 Betti numbers
    std::int64_t total() const { return betti[0] + betti[1] + betti[2]; }
};

struct RealStructureClass {
    KleinElement representative;
    std::size_t class_size = 0;
    std::vector<std::size_t> real_lines;          // lines mapped to themselves
    std::vector<std::size_t> real_blown_centers;  // blown points fixed by the plane involution
    std::optional<RealTopology> topology;
};

/// Anti-holomorphic involutions of the model up to conjugation in Kl, ordered by representative.
std::vector<RealStructureClass> classify_real_structures(const CoverModel& cover, const KleinModel& model);

/// Real locus of X for an anti-holomorphic involution: for odd m, and when the involution
/// fixes every generator word up to conjugation, it maps homeomorphically onto the real
/// part of the blown-up plane, RP^2 blown up at the real centers.
/// Throws std::domain_error for even m, non-involutions, or when the words are permuted.
RealTopology real_part_topology(const CoverModel& cover, const KleinModel& model, const KleinElement& element);

}  // namespace galcov
