#pragma once

#include "galcov/cyclotomic.hpp"

#include <array>
#include <optional>
#include <string>

namespace galcov {

using Vec3 = std::array<CycNumber, 3>;
using Matrix3 = std::array<Vec3, 3>;  // row-major

Vec3 cross(const Vec3& u, const Vec3& v);
CycNumber dot(const Vec3& u, const Vec3& v);
bool is_zero(const Vec3& v);
/// u and v span the same projective point (both nonzero).
bool proportional(const Vec3& u, const Vec3& v);
/// Scale so the first nonzero coordinate is 1. Throws on the zero vector.
Vec3 normalize_projective(const Vec3& v);
Vec3 conjugate(const Vec3& v);
bool is_real(const Vec3& v);
std::string to_string(const Vec3& v);

Matrix3 identity_matrix();
Matrix3 transpose(const Matrix3& m);
Matrix3 conjugate(const Matrix3& m);
Matrix3 operator*(const Matrix3& a, const Matrix3& b);
Vec3 operator*(const Matrix3& a, const Vec3& v);
CycNumber determinant(const Matrix3& m);
/// Inverse, or nullopt for a singular matrix.
std::optional<Matrix3> inverse(const Matrix3& m);
/// Scale so the first nonzero entry (row-major) is 1.
Matrix3 normalize_projective(const Matrix3& m);
/// m equals c * n for some nonzero scalar c.
bool proportional(const Matrix3& m, const Matrix3& n);

}  // namespace galcov
