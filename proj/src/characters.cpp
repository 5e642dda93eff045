#include "galcov/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace galcov {

bool CharacterSet::contains(const Character& a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

CharacterSet enumerate_characters(const Epimorphism& phi) {
    require_valid(phi);
    CharacterSet set;
    set.m = phi.m;
    for (const auto& c : all_vectors(phi.m, phi.k)) {
        Character a(phi.n(), 0);
        for (std::size_t i = 0; i < phi.n(); ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < phi.k; ++j) s += std::int64_t(c[j]) * phi.rows[i][j];
            a[i] = mod(s, phi.m);
        }
        set.elements.push_back(std::move(a));
    }
    std::sort(set.elements.begin(), set.elements.end());
    set.elements.erase(std::unique(set.elements.begin(), set.elements.end()), set.elements.end());
    return set;
}

std::optional<ModVector> character_coordinates(const Epimorphism& phi, const Character& a) {
    if (a.size() != phi.n()) throw std::invalid_argument("character has wrong length");
    for (const auto& c : all_vectors(phi.m, phi.k)) {
        bool match = true;
        for (std::size_t i = 0; i < phi.n() && match; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < phi.k; ++j) s += std::int64_t(c[j]) * phi.rows[i][j];
            match = mod(s, phi.m) == mod(a[i], phi.m);
        }
        if (match) return c;
    }
    return std::nullopt;
}

std::vector<std::size_t> r_profile(const Character& a, int m) {
    std::vector<std::size_t> r(static_cast<std::size_t>(m), 0);
    for (int v : a) ++r.at(static_cast<std::size_t>(mod(v, m)));
    return r;
}

std::vector<Character> unique_profile_elements(const CharacterSet& set) {
    std::map<std::vector<std::size_t>, std::size_t> count;
    for (const auto& a : set.elements) ++count[r_profile(a, set.m)];
    std::vector<Character> out;
    for (const auto& a : set.elements)
        if (count[r_profile(a, set.m)] == 1) out.push_back(a);
    return out;
}

Character permute(const Permutation& perm, const Character& a) {
    if (perm.size() != a.size()) throw std::invalid_argument("permutation degree differs from character length");
    Character b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[perm[i]];
    return b;
}

CharacterSet character_action(const Permutation& perm, const CharacterSet& set) {
    CharacterSet out;
    out.m = set.m;
    for (const auto& a : set.elements) out.elements.push_back(permute(perm, a));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

}  // namespace galcov
