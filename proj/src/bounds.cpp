#include "galcov/bounds.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace galcov {

std::vector<std::string> HodgeData::problems() const {
    std::vector<std::string> out;
    if (h10 < 0 || h20 < 0 || h11 < 0 || nu < 0 || p_plus < 0 || p_minus < 0)
        out.emplace_back("negative field");
    if (p_plus + p_minus != h11 - 1) out.emplace_back("p_plus + p_minus != h11 - 1");
    for (const auto& c : components) {
        if (c[0] != 1 || c[2] != 1 || c[1] < 0)
            out.emplace_back("component Betti triple must be (1, b1, 1) with b1 >= 0");
    }
    return out;
}

HodgeData hodge_from_invariants(std::int64_t k_squared, std::int64_t euler, std::int64_t irregularity) {
    if ((k_squared + euler) % 12 != 0)
        throw std::domain_error("K^2 + e is not divisible by 12");
    const std::int64_t chi = (k_squared + euler) / 12;
    HodgeData h;
    h.h10 = irregularity;
    h.h20 = chi - 1 + irregularity;
    h.h11 = euler - 2 + 4 * irregularity - 2 * h.h20;
    if (h.h20 < 0 || h.h11 < 1) throw std::domain_error("invariants give negative Hodge numbers");
    h.p_plus = h.h11 - 1;
    return h;
}

std::int64_t smith_total(const HodgeData& h) {
    return 2 + 4 * (h.h10 + h.nu) + 2 * h.h20 + h.h11;
}

std::int64_t real_betti_total(const HodgeData& h) {
    std::int64_t total = 0;
    for (const auto& c : h.components) total += c[0] + c[1] + c[2];
    return total;
}

bool is_maximal(const HodgeData& h) { return real_betti_total(h) == smith_total(h); }

std::int64_t lefschetz_relation(const HodgeData& h) {
    std::int64_t euler = 0;
    for (const auto& c : h.components) euler += c[0] - c[1] + c[2];
    const std::int64_t trace = euler - 1;
    if (std::llabs(trace) > h.h11 - 1) {
        throw std::domain_error("trace " + std::to_string(trace) +
                                " exceeds dim P^{1,1} = " + std::to_string(h.h11 - 1));
    }
    return trace;
}

std::int64_t maximal_beta1(const HodgeData& h) {
    return 1 + 2 * (h.h10 + h.nu) + h.h20 + h.p_minus;
}

std::int64_t maximal_beta1_my(const HodgeData& h) {
    return h.h11 + h.p_minus + h.h10 + 2 * h.nu;
}

bool my_identity(const HodgeData& h) { return h.h11 == h.h20 + h.h10 + 1; }

std::int64_t h20_lower_bound(const HodgeData& h) {
    if (!my_identity(h)) throw std::domain_error("h11 != h20 + h10 + 1");
    return 2 * h.nu + 5 * h.p_plus + 4;
}

ComponentBoundVerdict crosscap_component_bound(const HodgeData& h, std::int64_t k3) {
    ComponentBoundVerdict v;
    v.lhs = h.h11 + h.h10 + 2 * h.nu + h.p_minus;
    v.rhs = 2 * h.h11 + 2 * h.h10 + 4 * h.nu + 2 * h.p_plus + 2 - k3;
    v.feasible = v.lhs >= v.rhs;
    v.boundary = v.lhs == v.rhs;
    v.minimum_k3 = 3 + h.h10 + 2 * h.nu;
    // p_plus = h11 - 1 - p_minus turns lhs >= rhs into 3 p_minus >= 3 h11 + h10 + 2 nu - k3
    std::ostringstream os;
    const std::int64_t c = h.h10 + 2 * h.nu - k3;
    os << "3 p_minus >= 3 h11";
    if (c > 0) os << " + " << c;
    if (c < 0) os << " - " << -c;
    if (c == -3) os << "  (h11 <= p_minus + 1)";
    v.reduced = os.str();
    return v;
}

ComponentVerdict small_component_exclusion(const BettiTriple& component, bool negatively_curved) {
    if (!negatively_curved) return ComponentVerdict::not_applicable;
    return component[1] <= 2 ? ComponentVerdict::rejected : ComponentVerdict::accepted;
}

FakePlaneReport fake_plane_involution_check() {
    FakePlaneReport r;
    const Rational k_squared(9);

    bool all_contradict = true;
    for (const Rational& ratio : {Rational(1, 3), Rational(1)}) {
        const Rational c2 = ratio * ratio * k_squared;
        const Rational ck = ratio * k_squared;
        const Rational euler = -(c2 + ck);  // adjunction: e(C) = -(C^2 + CK)
        r.fixed_curve_samples.push_back({ratio, {euler, Rational(2) * c2}});
        if (!(euler.sign() < 0 && c2.sign() > 0)) all_contradict = false;
    }
    r.fixed_curve_excluded = all_contradict;
    r.steps.push_back("fixed curve C = rK, r > 0: e(C) = -9r(r+1) < 0 but 2C^2 = 18r^2 > 0");

    const std::array<std::int64_t, 5> betti{1, 0, 1, 0, 1};
    for (std::size_t i = 0; i < betti.size(); ++i)
        r.lefschetz_number += (i % 2 == 0 ? 1 : -1) * betti[i];
    r.steps.push_back("isolated fixed points: 1 - 0 + 1 - 0 + 1 = " + std::to_string(r.lefschetz_number));

    // D = diag(-1, -1) at an isolated fixed point of an involution
    const Rational d11 = Rational(1) - Rational(-1);
    const Rational d22 = Rational(1) - Rational(-1);
    r.det_at_fixed_point = d11 * d22;
    r.holomorphic_sum = Rational(r.lefschetz_number) / r.det_at_fixed_point;
    r.holomorphic_expected = Rational(1);  // 1 - h01 + h02 with p_g = q = 0
    r.contradiction = r.fixed_curve_excluded && r.holomorphic_sum != r.holomorphic_expected;
    r.steps.push_back("holomorphic Lefschetz: sum 1/det(Id - D_i) = " + r.holomorphic_sum.str() +
                      " but 1 - h01 + h02 = " + r.holomorphic_expected.str());
    return r;
}

}  // namespace galcov
