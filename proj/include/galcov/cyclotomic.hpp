#pragma once

#include "galcov/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace galcov {

/// Element a + b*z of Q(z), z = exp(i*pi/3) a primitive 6th root of unity.
/// Arithmetic reduces with z^2 = z - 1; complex conjugation sends z to 1 - z.
class CycNumber {
public:
    CycNumber() = default;
    CycNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    CycNumber(std::int64_t a) : a_(a) {}         // NOLINT(google-explicit-constructor)
    CycNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static CycNumber zeta() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_real() const { return b_.is_zero(); }

    CycNumber conjugate() const;
    /// Field norm a^2 + ab + b^2 (= |x|^2).
    Rational norm() const;
    CycNumber inverse() const;

    CycNumber operator-() const { return {-a_, -b_}; }
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o);

    friend CycNumber operator+(CycNumber x, const CycNumber& y) { return x += y; }
    friend CycNumber operator-(CycNumber x, const CycNumber& y) { return x -= y; }
    friend CycNumber operator*(CycNumber x, const CycNumber& y) { return x *= y; }
    friend CycNumber operator/(CycNumber x, const CycNumber& y) { return x /= y; }

    friend bool operator==(const CycNumber&, const CycNumber&) = default;
    /// Lexicographic on (a, b); only meaningful as a total order for containers.
    friend std::strong_ordering operator<=>(const CycNumber& x, const CycNumber& y);

    /// Canonical text "a+b*z": zero parts omitted, unit coefficient of z written as "z"/"-z", zero as "0".
    std::string str() const;
    /// Inverse of str(); also accepts e.g. "1*z", "2z", "3/2 - z", "z+1".
    static CycNumber parse(std::string_view text);

private:
    Rational a_;
    Rational b_;
};

inline CycNumber conjugate(const CycNumber& x) { return x.conjugate(); }
inline bool is_real(const CycNumber& x) { return x.is_real(); }

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

}  // namespace galcov
