#include "galcov/projective.hpp"

#include <stdexcept>

namespace galcov {

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

CycNumber dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool proportional(const Vec3& u, const Vec3& v) {
    return !is_zero(u) && !is_zero(v) && is_zero(cross(u, v));
}

Vec3 normalize_projective(const Vec3& v) {
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        CycNumber inv = c.inverse();
        return {v[0] * inv, v[1] * inv, v[2] * inv};
    }
    throw std::invalid_argument("zero vector has no projective class");
}

Vec3 conjugate(const Vec3& v) { return {v[0].conjugate(), v[1].conjugate(), v[2].conjugate()}; }

bool is_real(const Vec3& v) { return v[0].is_real() && v[1].is_real() && v[2].is_real(); }

std::string to_string(const Vec3& v) {
    return "[" + v[0].str() + ":" + v[1].str() + ":" + v[2].str() + "]";
}

Matrix3 identity_matrix() {
    Matrix3 m;
    for (int i = 0; i < 3; ++i) m[i][i] = CycNumber(1);
    return m;
}

Matrix3 transpose(const Matrix3& m) {
    Matrix3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

Matrix3 conjugate(const Matrix3& m) { return {conjugate(m[0]), conjugate(m[1]), conjugate(m[2])}; }

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

Vec3 operator*(const Matrix3& a, const Vec3& v) { return {dot(a[0], v), dot(a[1], v), dot(a[2], v)}; }

CycNumber determinant(const Matrix3& m) { return dot(m[0], cross(m[1], m[2])); }

std::optional<Matrix3> inverse(const Matrix3& m) {
    CycNumber det = determinant(m);
    if (det.is_zero()) return std::nullopt;
    CycNumber inv = det.inverse();
    // columns of the inverse are cross products of rows
    Vec3 c0 = cross(m[1], m[2]);
    Vec3 c1 = cross(m[2], m[0]);
    Vec3 c2 = cross(m[0], m[1]);
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        r[i][0] = c0[i] * inv;
        r[i][1] = c1[i] * inv;
        r[i][2] = c2[i] * inv;
    }
    return r;
}

Matrix3 normalize_projective(const Matrix3& m) {
    for (const auto& row : m)
        for (const auto& c : row) {
            if (c.is_zero()) continue;
            CycNumber inv = c.inverse();
            Matrix3 r;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] * inv;
            return r;
        }
    throw std::invalid_argument("zero matrix has no projective class");
}

bool proportional(const Matrix3& m, const Matrix3& n) {
    // compare normalized forms; both must be nonzero
    try {
        return normalize_projective(m) == normalize_projective(n);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace galcov
