#include "galcov/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galcov {

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    Permutation r(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
    return r;
}

std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
    Permutation p = identity_permutation(n);
    std::vector<bool> used(n, false);
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("malformed cycle notation '" + std::string(text) + "'"); };
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') fail();
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) fail();
        std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
        std::vector<std::size_t> cycle;
        long long v;
        while (in >> v) {
            if (v < 1 || static_cast<std::size_t>(v) > n || used[v - 1]) fail();
            used[v - 1] = true;
            cycle.push_back(static_cast<std::size_t>(v - 1));
        }
        if (!in.eof()) fail();
        for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
        pos = close + 1;
    }
    return p;
}

}  // namespace galcov
