#include "galcov/arrangement.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace galcov {

Line::Line(const Vec3& coeffs) : coeffs_(normalize_projective(coeffs)) {}

bool IncidencePoint::contains(std::size_t line) const {
    return std::binary_search(incident.begin(), incident.end(), line);
}

Arrangement Arrangement::build(std::vector<Line> lines) {
    const std::size_t n = lines.size();
    if (n < 2) throw std::invalid_argument("an arrangement needs at least 2 lines");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lines[i] == lines[j])
                throw std::invalid_argument("duplicate line L" + std::to_string(i + 1) + " = L" +
                                            std::to_string(j + 1));

    std::map<Vec3, std::vector<std::size_t>> by_coords;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec3 p = normalize_projective(cross(lines[i].coeffs(), lines[j].coeffs()));
            auto& inc = by_coords[p];
            inc.push_back(i);
            inc.push_back(j);
        }

    Arrangement arr;
    arr.lines_ = std::move(lines);
    for (auto& [coords, inc] : by_coords) {
        std::sort(inc.begin(), inc.end());
        inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
        arr.points_.push_back({coords, inc});
    }
    std::sort(arr.points_.begin(), arr.points_.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return a.incident < b.incident; });

    arr.meet_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t p = 0; p < arr.points_.size(); ++p) {
        const auto& pt = arr.points_[p];
        for (auto i : pt.incident) {
            if (!dot(arr.lines_[i].coeffs(), pt.coords).is_zero())
                throw std::logic_error("incidence point not on its line");
            for (auto j : pt.incident) arr.meet_[i][j] = p;
        }
        ++arr.t_[pt.multiplicity()];
    }
    return arr;
}

std::size_t Arrangement::t(std::size_t r) const {
    auto it = t_.find(r);
    return it == t_.end() ? 0 : it->second;
}

std::vector<std::size_t> Arrangement::points_on(std::size_t line) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < points_.size(); ++p)
        if (points_[p].contains(line)) out.push_back(p);
    return out;
}

std::optional<std::size_t> Arrangement::find_point(const std::vector<std::size_t>& lines) const {
    for (std::size_t p = 0; p < points_.size(); ++p)
        if (points_[p].incident == lines) return p;
    return std::nullopt;
}

std::vector<std::size_t> Arrangement::profile(std::size_t line) const {
    std::vector<std::size_t> out;
    for (auto p : points_on(line)) out.push_back(points_[p].multiplicity());
    std::sort(out.begin(), out.end());
    return out;
}

Arrangement dual_hesse() {
    const CycNumber z = CycNumber::zeta();
    const CycNumber z2 = z * z;  // mu^2
    const CycNumber one(1), zero(0);
    std::vector<Line> lines = {
        Line({one, zero, -one}),  // x1 - x3
        Line({one, zero, -z2}),   // x1 - mu^2 x3
        Line({one, zero, z}),     // x1 + mu x3
        Line({zero, one, -z2}),   // x2 - mu^2 x3
        Line({zero, one, -one}),  // x2 - x3
        Line({zero, one, z}),     // x2 + mu x3
        Line({one, z, zero}),     // x1 + mu x2
        Line({one, -z2, zero}),   // x1 - mu^2 x2
        Line({one, -one, zero}),  // x1 - x2
    };
    return Arrangement::build(std::move(lines));
}

Arrangement complete_quadrilateral() {
    const CycNumber one(1), zero(0);
    const std::array<Vec3, 4> base = {Vec3{one, zero, zero}, Vec3{zero, one, zero},
                                      Vec3{zero, zero, one}, Vec3{one, one, one}};
    // L1=P1P2, L2=P1P3, L3=P2P3 and their opposites L4=P3P4, L5=P2P4, L6=P1P4
    const std::array<std::pair<int, int>, 6> pairs = {{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}};
    std::vector<Line> lines;
    for (auto [a, b] : pairs) lines.emplace_back(cross(base[a], base[b]));
    return Arrangement::build(std::move(lines));
}

LineSymmetry operator*(const LineSymmetry& a, const LineSymmetry& b) {
    LineSymmetry r;
    r.perm = compose(a.perm, b.perm);
    r.anti = a.anti != b.anti;
    if (a.matrix && b.matrix) {
        Matrix3 mb = a.anti ? conjugate(*b.matrix) : *b.matrix;
        r.matrix = normalize_projective(*a.matrix * mb);
    }
    return r;
}

std::string LineSymmetry::str() const { return cycle_string(perm) + (anti ? " anti" : " holo"); }

bool preserves_incidence(const Arrangement& arr, const Permutation& perm) {
    if (perm.size() != arr.size() || !is_permutation(perm)) return false;
    for (const auto& pt : arr.points()) {
        std::vector<std::size_t> image;
        for (auto i : pt.incident) image.push_back(perm[i]);
        std::sort(image.begin(), image.end());
        if (!arr.find_point(image)) return false;
    }
    return true;
}

std::vector<Permutation> combinatorial_automorphisms(const Arrangement& arr) {
    const std::size_t n = arr.size();
    std::vector<std::vector<std::size_t>> profiles(n);
    for (std::size_t i = 0; i < n; ++i) profiles[i] = arr.profile(i);

    std::vector<Permutation> result;
    Permutation perm(n);
    std::vector<bool> used(n, false);

    // Concurrency of {i, j, x} must match concurrency of the images.
    auto consistent = [&](std::size_t x) {
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t j = i + 1; j < x; ++j) {
                bool before = arr.meet(i, j) == arr.meet(i, x);
                bool after = arr.meet(perm[i], perm[j]) == arr.meet(perm[i], perm[x]);
                if (before != after) return false;
            }
        return true;
    };

    auto search = [&](auto&& self, std::size_t x) -> void {
        if (x == n) {
            if (preserves_incidence(arr, perm)) result.push_back(perm);
            return;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || profiles[y] != profiles[x]) continue;
            perm[x] = y;
            if (!consistent(x)) continue;
            used[y] = true;
            self(self, x + 1);
            used[y] = false;
        }
    };
    search(search, 0);
    return result;
}

namespace {

Vec3 maybe_conj(const Vec3& v, bool anti) { return anti ? conjugate(v) : v; }

bool independent(const Vec3& a, const Vec3& b, const Vec3& c) {
    return !dot(a, cross(b, c)).is_zero();
}

/// Four lines, no three concurrent.
std::optional<std::array<std::size_t, 4>> frame(const Arrangement& arr) {
    const auto& L = arr.lines();
    const std::size_t n = L.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!independent(L[a].coeffs(), L[b].coeffs(), L[c].coeffs())) continue;
                for (std::size_t d = c + 1; d < n; ++d) {
                    const auto& vd = L[d].coeffs();
                    if (independent(L[a].coeffs(), L[b].coeffs(), vd) &&
                        independent(L[a].coeffs(), L[c].coeffs(), vd) &&
                        independent(L[b].coeffs(), L[c].coeffs(), vd))
                        return std::array<std::size_t, 4>{a, b, c, d};
                }
            }
    return std::nullopt;
}

Matrix3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        m[i][0] = c0[i];
        m[i][1] = c1[i];
        m[i][2] = c2[i];
    }
    return m;
}

}  // namespace

std::optional<Matrix3> realize_symmetry(const Arrangement& arr, const Permutation& perm, bool anti) {
    if (perm.size() != arr.size() || !is_permutation(perm)) return std::nullopt;
    const auto& L = arr.lines();
    auto fr = frame(arr);
    if (!fr) throw std::invalid_argument("no four lines in general position; symmetry matrix is not determined");
    auto [a, b, c, d] = *fr;
    Matrix3 src = from_columns(maybe_conj(L[a].coeffs(), anti), maybe_conj(L[b].coeffs(), anti),
                               maybe_conj(L[c].coeffs(), anti));
    Matrix3 dst = from_columns(L[perm[a]].coeffs(), L[perm[b]].coeffs(), L[perm[c]].coeffs());
    auto src_inv = inverse(src);
    auto dst_inv = inverse(dst);
    if (!src_inv || !dst_inv) return std::nullopt;
    Vec3 u = *src_inv * maybe_conj(L[d].coeffs(), anti);
    Vec3 v = *dst_inv * L[perm[d]].coeffs();
    Matrix3 scale;
    for (int i = 0; i < 3; ++i) {
        if (u[i].is_zero() || v[i].is_zero()) return std::nullopt;
        scale[i][i] = v[i] / u[i];
    }
    Matrix3 m = dst * scale * *src_inv;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (!proportional(m * maybe_conj(L[i].coeffs(), anti), L[perm[i]].coeffs())) return std::nullopt;
    return normalize_projective(m);
}

Vec3 apply_to_point(const LineSymmetry& sym, const Vec3& point) {
    if (!sym.matrix) throw std::invalid_argument("symmetry " + sym.str() + " has no realizing matrix");
    auto inv = inverse(transpose(*sym.matrix));
    if (!inv) throw std::invalid_argument("singular realizing matrix");
    return *inv * maybe_conj(point, sym.anti);
}

std::vector<std::size_t> fixed_points_of(const Arrangement& arr, const LineSymmetry& sym) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < arr.points().size(); ++p) {
        const Vec3& x = arr.points()[p].coords;
        if (proportional(apply_to_point(sym, x), x)) out.push_back(p);
    }
    return out;
}

}  // namespace galcov
