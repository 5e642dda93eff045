#pragma once

#include "galcov/arrangement.hpp"
#include "galcov/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace galcov {

/// Divisor class h*H + sum e_p*E_p on the plane blown up at `centers` (sorted point
/// indices of an arrangement). H^2 = 1, E_p^2 = -1, all other products vanish.
class DivisorClass {
public:
    explicit DivisorClass(std::vector<std::size_t> centers);

    static DivisorClass hyperplane(std::vector<std::size_t> centers);
    static DivisorClass exceptional(std::vector<std::size_t> centers, std::size_t point);

    const std::vector<std::size_t>& centers() const { return centers_; }
    const Rational& h() const { return h_; }
    /// Coefficient of E_point; zero for points that are not centers.
    Rational e(std::size_t point) const;
    void set_h(Rational v) { h_ = std::move(v); }
    void set_e(std::size_t point, Rational v);

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// "aH - b E3 + ..." with point indices as labels.
    std::string str() const;

private:
    std::size_t slot(std::size_t point) const;
    void require_same_context(const DivisorClass& o) const;

    std::vector<std::size_t> centers_;
    Rational h_;
    std::vector<Rational> e_;

    friend Rational pairing(const DivisorClass& a, const DivisorClass& b);
};

/// Intersection form. Throws std::invalid_argument for classes on different blow-ups.
Rational pairing(const DivisorClass& a, const DivisorClass& b);

/// Total transform of line i: H.
DivisorClass total_transform(std::vector<std::size_t> centers);
/// H minus the exceptional classes over blown points on line i.
DivisorClass strict_transform(const Arrangement& arr, std::size_t line, std::vector<std::size_t> centers);
/// -3H + sum E_p.
DivisorClass canonical_class(std::vector<std::size_t> centers);
/// Euler characteristic of the blown-up plane.
inline std::int64_t blown_plane_euler(const std::vector<std::size_t>& centers) {
    return 3 + static_cast<std::int64_t>(centers.size());
}

}  // namespace galcov
