#pragma once

#include "galcov/homology.hpp"
#include "galcov/permutation.hpp"

#include <optional>
#include <vector>

namespace galcov {

/// Exponent vector a in {0..m-1}^n with sum a_i = 0 (mod m). a_j is the vanishing order,
/// modulo m, along C_j of the functions in the eigenspace C(x1,x2) z^a.
using Character = ModVector;

/// The m^k characters spanned by the columns of phi, sorted lexicographically.
struct CharacterSet {
    int m = 0;
    std::vector<Character> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const Character& a) const;
    friend bool operator==(const CharacterSet&, const CharacterSet&) = default;
};

CharacterSet enumerate_characters(const Epimorphism& phi);

/// Coefficients c with sum_j c_j * column_j(phi) = a, or nullopt if a is not in the span.
std::optional<ModVector> character_coordinates(const Epimorphism& phi, const Character& a);

/// r_i = number of coordinates equal to i, for i = 0..m-1.
std::vector<std::size_t> r_profile(const Character& a, int m);

/// Characters whose r-profile occurs exactly once in the set, in set order.
std::vector<Character> unique_profile_elements(const CharacterSet& set);

/// (a o perm)_i = a_{perm(i)}.
Character permute(const Permutation& perm, const Character& a);
/// { a o perm : a in set }, re-sorted.
CharacterSet character_action(const Permutation& perm, const CharacterSet& set);

}  // namespace galcov
