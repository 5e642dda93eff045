#include "galcov/modular.hpp"

#include <stdexcept>
#include <utility>

namespace galcov {

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

int mod(std::int64_t x, int m) {
    std::int64_t r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int inverse_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw std::domain_error("zero has no inverse modulo " + std::to_string(p));
    // Fermat: a^(p-2)
    std::int64_t result = 1, base = a;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ModMatrix& rows, std::size_t cols, int p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        int inv = inverse_mod(rows[r][c], p);
        for (auto& v : rows[r]) v = static_cast<int>(std::int64_t(mod(v, p)) * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            int f = mod(rows[i][c], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = mod(rows[i][j] - std::int64_t(f) * rows[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_mod_p(ModMatrix rows, int p) {
    if (!is_prime(p)) throw std::invalid_argument("rank requires a prime modulus, got " + std::to_string(p));
    if (rows.empty()) return 0;
    return rref(rows, rows.front().size(), p).size();
}

ModMatrix nullspace_mod_p(const ModMatrix& a, std::size_t cols, int p) {
    if (!is_prime(p)) throw std::invalid_argument("nullspace requires a prime modulus, got " + std::to_string(p));
    ModMatrix rows = a;
    auto pivots = rref(rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    ModMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ModVector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-std::int64_t(rows[r][free]), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ModVector> all_vectors(int m, std::size_t k) {
    std::vector<ModVector> out;
    ModVector v(k, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++v[i] < m) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

}  // namespace galcov
