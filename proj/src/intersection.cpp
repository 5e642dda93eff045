#include "galcov/intersection.hpp"

#include <algorithm>
#include <stdexcept>

namespace galcov {

DivisorClass::DivisorClass(std::vector<std::size_t> centers) : centers_(std::move(centers)) {
    std::sort(centers_.begin(), centers_.end());
    if (std::adjacent_find(centers_.begin(), centers_.end()) != centers_.end())
        throw std::invalid_argument("repeated blow-up center");
    e_.assign(centers_.size(), Rational(0));
}

DivisorClass DivisorClass::hyperplane(std::vector<std::size_t> centers) {
    DivisorClass d(std::move(centers));
    d.h_ = 1;
    return d;
}

DivisorClass DivisorClass::exceptional(std::vector<std::size_t> centers, std::size_t point) {
    DivisorClass d(std::move(centers));
    d.e_[d.slot(point)] = 1;
    return d;
}

std::size_t DivisorClass::slot(std::size_t point) const {
    auto it = std::lower_bound(centers_.begin(), centers_.end(), point);
    if (it == centers_.end() || *it != point)
        throw std::invalid_argument("point " + std::to_string(point) + " is not a blow-up center");
    return static_cast<std::size_t>(it - centers_.begin());
}

Rational DivisorClass::e(std::size_t point) const {
    auto it = std::lower_bound(centers_.begin(), centers_.end(), point);
    if (it == centers_.end() || *it != point) return Rational(0);
    return e_[static_cast<std::size_t>(it - centers_.begin())];
}

void DivisorClass::set_e(std::size_t point, Rational v) { e_[slot(point)] = std::move(v); }

void DivisorClass::require_same_context(const DivisorClass& o) const {
    if (centers_ != o.centers_) throw std::invalid_argument("divisor classes live on different blow-ups");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    require_same_context(o);
    h_ += o.h_;
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    require_same_context(o);
    h_ -= o.h_;
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    h_ *= c;
    for (auto& v : e_) v *= c;
    return *this;
}

std::string DivisorClass::str() const {
    std::string out;
    auto term = [&out](const Rational& c, const std::string& label) {
        if (c.is_zero()) return;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) out += mag.str() + " ";
        out += label;
    };
    term(h_, "H");
    for (std::size_t i = 0; i < centers_.size(); ++i) term(e_[i], "E" + std::to_string(centers_[i]));
    return out.empty() ? "0" : out;
}

Rational pairing(const DivisorClass& a, const DivisorClass& b) {
    a.require_same_context(b);
    Rational r = a.h_ * b.h_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) r -= a.e_[i] * b.e_[i];
    return r;
}

DivisorClass total_transform(std::vector<std::size_t> centers) { return DivisorClass::hyperplane(std::move(centers)); }

DivisorClass strict_transform(const Arrangement& arr, std::size_t line, std::vector<std::size_t> centers) {
    if (line >= arr.size()) throw std::invalid_argument("line index out of range");
    DivisorClass d = DivisorClass::hyperplane(centers);
    for (auto p : d.centers())
        if (arr.points().at(p).contains(line)) d.set_e(p, -1);
    return d;
}

DivisorClass canonical_class(std::vector<std::size_t> centers) {
    DivisorClass d(std::move(centers));
    d.set_h(-3);
    for (auto p : std::vector<std::size_t>(d.centers())) d.set_e(p, 1);
    return d;
}

}  // namespace galcov
