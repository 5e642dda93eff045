#pragma once

#include "galcov/cyclotomic.hpp"
#include "galcov/homology.hpp"

#include <random>
#include <set>
#include <vector>

namespace testing {

inline galcov::CycNumber random_cyc(std::mt19937& rng, int range = 7, int den = 4) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> d(1, den);
    return {galcov::Rational(num(rng), d(rng)), galcov::Rational(num(rng), d(rng))};
}

inline std::vector<std::size_t> lines_of(std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> out;
    for (auto i : one_based) out.push_back(i - 1);
    return out;
}

/// A random valid epimorphism onto (Z/m)^k for n lines: random rows, last row fixing the sum,
/// retried until surjective.
inline galcov::Epimorphism random_phi(std::mt19937& rng, std::size_t n, int m, std::size_t k) {
    std::uniform_int_distribution<int> digit(0, m - 1);
    for (;;) {
        galcov::Epimorphism phi{m, k, std::vector<galcov::ModVector>(n, galcov::ModVector(k, 0))};
        for (std::size_t j = 0; j < k; ++j) {
            int sum = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                phi.rows[i][j] = digit(rng);
                sum += phi.rows[i][j];
            }
            phi.rows[n - 1][j] = galcov::mod(-sum, m);
        }
        if (galcov::validate_epimorphism(phi).valid()) return phi;
    }
}

}  // namespace testing
