#pragma once

#include "galcov/permutation.hpp"
#include "galcov/projective.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace galcov {

/// Line c0*x1 + c1*x2 + c2*x3 = 0, stored with its first nonzero coefficient equal to 1.
class Line {
public:
    explicit Line(const Vec3& coeffs);
    const Vec3& coeffs() const { return coeffs_; }
    bool is_real() const { return galcov::is_real(coeffs_); }
    friend bool operator==(const Line&, const Line&) = default;

private:
    Vec3 coeffs_;
};

struct IncidencePoint {
    Vec3 coords;                        // normalized projective coordinates
    std::vector<std::size_t> incident;  // sorted 0-based line indices
    std::size_t multiplicity() const { return incident.size(); }
    bool contains(std::size_t line) const;
};

/// A line arrangement with its full incidence structure. Points are ordered
/// lexicographically by their incident line sets.
class Arrangement {
public:
    /// Throws std::invalid_argument on fewer than 2 lines or duplicate lines.
    static Arrangement build(std::vector<Line> lines);

    std::size_t size() const { return lines_.size(); }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<IncidencePoint>& points() const { return points_; }
    /// Multiplicity table: t[r] = number of points lying on exactly r lines.
    const std::map<std::size_t, std::size_t>& multiplicities() const { return t_; }
    std::size_t t(std::size_t r) const;

    /// Index of the point where lines i and j meet.
    std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i][j]; }
    /// Indices of points on line i, ascending.
    std::vector<std::size_t> points_on(std::size_t line) const;
    /// Index of the point whose incident set is exactly `lines` (sorted), if any.
    std::optional<std::size_t> find_point(const std::vector<std::size_t>& lines) const;
    /// Sorted multiplicities of the points on a line.
    std::vector<std::size_t> profile(std::size_t line) const;

private:
    std::vector<Line> lines_;
    std::vector<IncidencePoint> points_;
    std::vector<std::vector<std::size_t>> meet_;
    std::map<std::size_t, std::size_t> t_;
};

/// The nine lines dual to the flexes of x1^3 + x2^3 + x3^3 = 0, numbered as L1..L9 with mu = z.
Arrangement dual_hesse();

/// Six lines through pairs of [1:0:0], [0:1:0], [0:0:1], [1:1:1], numbered so that the
/// double points are L1∩L4, L2∩L5, L3∩L6.
Arrangement complete_quadrilateral();

/// An (anti-)projective symmetry acting on lines by l -> M * s(l), where s is coefficient
/// conjugation when `anti` is set and the identity otherwise.
struct LineSymmetry {
    Permutation perm;
    bool anti = false;
    std::optional<Matrix3> matrix;

    /// (a * b) applies b first. Matrices compose as M_a * s_a(M_b).
    friend LineSymmetry operator*(const LineSymmetry& a, const LineSymmetry& b);
    std::string str() const;
};

/// All line permutations preserving the incidence relation, in lexicographic order.
std::vector<Permutation> combinatorial_automorphisms(const Arrangement& arr);

bool preserves_incidence(const Arrangement& arr, const Permutation& perm);

/// A matrix M with M * s(L_i) proportional to L_perm(i) for every line, normalized so its
/// first nonzero entry is 1; nullopt when none exists. Throws std::invalid_argument when the
/// arrangement has no four lines in general position.
std::optional<Matrix3> realize_symmetry(const Arrangement& arr, const Permutation& perm, bool anti);

/// Image of a point under the symmetry: p -> M^{-T} s(p).
Vec3 apply_to_point(const LineSymmetry& sym, const Vec3& point);

/// Indices of incidence points fixed by a realized symmetry.
/// Throws std::invalid_argument if `sym.matrix` is empty.
std::vector<std::size_t> fixed_points_of(const Arrangement& arr, const LineSymmetry& sym);

}  // namespace galcov
