#include "galcov/cyclotomic.hpp"

#include <ostream>
#include <stdexcept>

namespace galcov {

CycNumber CycNumber::conjugate() const { return {a_ + b_, -b_}; }

Rational CycNumber::norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    Rational n = norm();
    CycNumber c = conjugate();
    return {c.a_ / n, c.b_ / n};
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    // (a + bz)(c + dz) = ac - bd + (ad + bc + bd) z
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const CycNumber& x, const CycNumber& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
}

std::string CycNumber::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out = a_.str();
    if (b_.is_zero()) return out;
    if (b_ == Rational(1)) {
        out += out.empty() ? "z" : "+z";
    } else if (b_ == Rational(-1)) {
        out += "-z";
    } else {
        if (!out.empty() && b_.sign() > 0) out += "+";
        out += b_.str() + "*z";
    }
    return out;
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

}  // namespace

CycNumber CycNumber::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
    CycNumber result;
    bool seen_real = false;
    bool seen_zeta = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            // a sign right after '/' never starts a term; Rational::parse rejects it
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw std::invalid_argument("malformed cyclotomic literal '" + s + "'");
        if (term.back() == 'z') {
            if (seen_zeta) throw std::invalid_argument("repeated z term in '" + s + "'");
            seen_zeta = true;
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
            Rational coeff = term.empty() ? Rational(1) : Rational::parse(term);
            result.b_ = negative ? -coeff : coeff;
        } else {
            if (seen_real) throw std::invalid_argument("repeated rational term in '" + s + "'");
            seen_real = true;
            Rational value = Rational::parse(term);
            result.a_ = negative ? -value : value;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.str(); }

}  // namespace galcov
