#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

/// Permutation of {0..n-1}; perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& p);
bool is_identity(const Permutation& p);
/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Disjoint-cycle notation with 1-based labels, fixed points omitted; "()" for the identity.
std::string cycle_string(const Permutation& p);
/// Parses cycle notation such as "(2 3)(4 6)"; labels are 1-based.
Permutation parse_cycles(std::string_view text, std::size_t n);

}  // namespace galcov
