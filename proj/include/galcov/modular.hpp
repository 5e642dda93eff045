#pragma once

#include <cstdint>
#include <vector>

namespace galcov {

using ModVector = std::vector<int>;
using ModMatrix = std::vector<ModVector>;  // row-major

bool is_prime(int m);
/// Representative in [0, m).
int mod(std::int64_t x, int m);
/// Inverse of a unit modulo a prime p.
int inverse_mod(int a, int p);
/// Rank of the matrix over the field with p elements (p prime).
std::size_t rank_mod_p(ModMatrix rows, int p);
/// Basis of {x : A x = 0} over the field with p elements; A has `cols` columns.
ModMatrix nullspace_mod_p(const ModMatrix& a, std::size_t cols, int p);
/// All vectors of (Z/m)^k, lexicographic.
std::vector<ModVector> all_vectors(int m, std::size_t k);

}  // namespace galcov
