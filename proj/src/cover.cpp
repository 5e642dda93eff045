#include "galcov/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace galcov {

namespace {

bool is_zero_vec(const ModVector& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// Order of the subgroup of (Z/m)^k generated by `gens` (m prime or 1).
std::int64_t subgroup_order(const std::vector<ModVector>& gens, int m) {
    if (m == 1) return 1;
    std::int64_t order = 1;
    for (std::size_t r = rank_mod_p(gens, m); r > 0; --r) order *= m;
    return order;
}

std::string join_lines(const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s;
}

/// Components (indices into cover.branch()) crossing component c, and all meridians meeting it.
struct Crossings {
    std::vector<std::size_t> branch_neighbours;
    std::vector<ModVector> meridians;
};

Crossings crossings(const CoverModel& cover, std::size_t c) {
    const auto& arr = cover.arrangement();
    const auto& comp = cover.branch()[c];
    const auto& blown = cover.blown();
    auto find_branch = [&](BranchComponent::Kind kind, std::size_t index) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < cover.branch().size(); ++j)
            if (cover.branch()[j].kind == kind && cover.branch()[j].index == index) return j;
        return std::nullopt;
    };
    Crossings out;
    out.meridians.push_back(comp.meridian);
    auto add = [&](BranchComponent::Kind kind, std::size_t index, ModVector meridian) {
        out.meridians.push_back(std::move(meridian));
        if (auto j = find_branch(kind, index)) out.branch_neighbours.push_back(*j);
    };
    if (comp.kind == BranchComponent::Kind::line) {
        const std::size_t i = comp.index;
        for (auto p : arr.points_on(i)) {
            const auto& pt = arr.points()[p];
            if (std::binary_search(blown.begin(), blown.end(), p)) {
                add(BranchComponent::Kind::exceptional, p, cover.phi().apply(eps_class(pt, arr.size())));
            } else {
                std::size_t branched_here = 0;
                for (auto j : pt.incident) {
                    if (!is_zero_vec(cover.phi().rows[j])) ++branched_here;
                    if (j != i) add(BranchComponent::Kind::line, j, cover.phi().rows[j]);
                }
                if (branched_here > 2)
                    throw std::domain_error("unblown point " + std::to_string(p) + " lies on " +
                                            std::to_string(branched_here) + " branch curves");
            }
        }
    } else {
        for (auto i : arr.points()[comp.index].incident) add(BranchComponent::Kind::line, i, cover.phi().rows[i]);
    }
    return out;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0) throw std::logic_error("non-integral stratum count");
    return a / b;
}

}  // namespace

std::string BranchComponent::label(const Arrangement& arr) const {
    if (kind == Kind::line) return "C" + std::to_string(index + 1);
    return "D" + join_lines(arr.points().at(index).incident);
}

CoverModel CoverModel::build(Arrangement arr, Epimorphism phi, std::optional<std::vector<std::size_t>> blown) {
    require_valid(phi);
    if (phi.n() != arr.size())
        throw std::invalid_argument("epimorphism has " + std::to_string(phi.n()) + " rows for " +
                                    std::to_string(arr.size()) + " lines");
    CoverModel c;
    c.arr_ = std::move(arr);
    c.phi_ = std::move(phi);
    c.blown_ = blown ? std::move(*blown) : default_blowup(c.arr_);
    std::sort(c.blown_.begin(), c.blown_.end());
    if (std::adjacent_find(c.blown_.begin(), c.blown_.end()) != c.blown_.end())
        throw std::invalid_argument("blow-up set repeats a point");
    for (auto p : c.blown_)
        if (p >= c.arr_.points().size()) throw std::invalid_argument("blow-up point " + std::to_string(p) + " does not exist");

    c.cert_ = smoothness_check(c.arr_, c.phi_, c.blown_);
    c.deck_ = galois_kernel(c.phi_);
    for (std::size_t i = 0; i < c.arr_.size(); ++i) {
        const ModVector& mer = c.phi_.rows[i];
        if (is_zero_vec(mer)) continue;
        c.branch_.push_back({BranchComponent::Kind::line, i, mer, c.phi_.m, strict_transform(c.arr_, i, c.blown_)});
    }
    for (auto p : c.blown_) {
        ModVector mer = c.phi_.apply(eps_class(c.arr_.points()[p], c.arr_.size()));
        if (is_zero_vec(mer)) continue;
        c.branch_.push_back({BranchComponent::Kind::exceptional, p, std::move(mer), c.phi_.m,
                             DivisorClass::exceptional(c.blown_, p)});
    }
    return c;
}

void CoverModel::require_smooth() const {
    if (!cert_.smooth()) throw std::domain_error("cover is not smooth: " + cert_.failures.front());
}

DivisorClass cover_canonical(const CoverModel& cover) {
    cover.require_smooth();
    DivisorClass k = canonical_class(cover.blown());
    for (const auto& b : cover.branch()) k += Rational(b.ramification - 1, b.ramification) * b.cls;
    return k;
}

InvariantReport invariants(const CoverModel& cover) {
    cover.require_smooth();
    const auto deg = static_cast<std::int64_t>(cover.degree());
    const int m = cover.phi().m;
    InvariantReport rep;
    rep.degree = deg;
    rep.canonical_on_base = cover_canonical(cover);
    const DivisorClass& kb = rep.canonical_on_base;
    rep.k_squared = (Rational(deg) * pairing(kb, kb)).to_int64();

    std::int64_t open_sum = 0;  // sum of fibre-size * e(open part of component)
    std::int64_t point_sum = 0;
    std::int64_t branch_points = 0;
    for (std::size_t c = 0; c < cover.branch().size(); ++c) {
        const auto& comp = cover.branch()[c];
        Crossings x = crossings(cover, c);
        const std::int64_t e = comp.ramification;

        CurveInvariants ci;
        ci.label = comp.label(cover.arrangement());
        ci.kind = comp.kind;
        ci.index = comp.index;
        ci.ramification = comp.ramification;
        ci.self_intersection = (Rational(deg) * pairing(comp.cls, comp.cls) / Rational(e * e)).to_int64();
        ci.canonical_degree = (Rational(deg) * pairing(comp.cls, kb) / Rational(e)).to_int64();
        ci.components = exact_div(deg, subgroup_order(x.meridians, m));
        Rational twice_genus_minus_two =
            Rational(ci.self_intersection + ci.canonical_degree) / Rational(ci.components);
        Rational genus = Rational(1) + twice_genus_minus_two / Rational(2);
        if (!genus.is_integer() || genus.sign() < 0)
            throw std::logic_error("adjunction gives genus " + genus.str() + " for " + ci.label);
        ci.genus = genus.to_int64();
        rep.curves.push_back(std::move(ci));

        const auto on_curve = static_cast<std::int64_t>(x.branch_neighbours.size());
        open_sum += exact_div(deg, e) * (2 - on_curve);
        for (auto j : x.branch_neighbours) {
            if (j < c) continue;  // count each crossing once
            ++branch_points;
            point_sum += exact_div(deg, subgroup_order({comp.meridian, cover.branch()[j].meridian}, m));
        }
    }
    rep.branch_points = branch_points;
    rep.complement_euler = blown_plane_euler(cover.blown()) -
                           2 * static_cast<std::int64_t>(cover.branch().size()) + branch_points;
    rep.euler = deg * rep.complement_euler + open_sum + point_sum;
    rep.chi = Rational(rep.k_squared + rep.euler) / Rational(12);
    rep.my_defect = rep.k_squared - 3 * rep.euler;
    return rep;
}

ThreeCanonicalDecomposition three_canonical_decomposition(const CoverModel& cover) {
    cover.require_smooth();
    if (cover.branch().empty()) throw std::domain_error("no branch curves: the cover is unramified");
    const auto& arr = cover.arrangement();
    const auto n = static_cast<std::int64_t>(arr.size());
    ThreeCanonicalDecomposition d;
    d.line_coeff = Rational(-9, n);

    DivisorClass rhs(cover.blown());
    for (std::size_t i = 0; i < arr.size(); ++i) rhs += d.line_coeff * strict_transform(arr, i, cover.blown());
    for (auto p : cover.blown()) {
        Rational y = Rational(3) + d.line_coeff * Rational(static_cast<std::int64_t>(arr.points()[p].multiplicity()));
        d.exceptional_base.push_back(y);
        rhs += y * DivisorClass::exceptional(cover.blown(), p);
    }
    if (rhs != Rational(3) * canonical_class(cover.blown())) throw std::logic_error("3K ansatz does not close");
    d.base_identity = d.line_coeff == Rational(-1) &&
                      std::all_of(d.exceptional_base.begin(), d.exceptional_base.end(),
                                  [](const Rational& y) { return y.is_zero(); });

    // f^*(L'_i) = e_i C_i, f^*(E_p) = e_p D_p, and K_X = f^*K + sum (e - 1) C.
    d.integral = true;
    d.all_positive = true;
    for (const auto& b : cover.branch()) {
        Rational base = d.line_coeff;
        if (b.kind == BranchComponent::Kind::exceptional) {
            auto pos = std::lower_bound(cover.blown().begin(), cover.blown().end(), b.index) - cover.blown().begin();
            base = d.exceptional_base[static_cast<std::size_t>(pos)];
        }
        Rational coeff = base * Rational(b.ramification) + Rational(3 * (b.ramification - 1));
        d.integral = d.integral && coeff.is_integer();
        d.all_positive = d.all_positive && coeff.sign() > 0;
        d.curve_coeffs.push_back(std::move(coeff));
    }
    return d;
}

std::vector<std::vector<std::int64_t>> invariant_curve_filter(const std::vector<std::int64_t>& coeffs,
                                                              std::int64_t target) {
    for (auto c : coeffs)
        if (c <= 0) throw std::invalid_argument("filter coefficients must be positive");
    std::vector<std::vector<std::int64_t>> out;
    if (target < 0) return out;
    std::vector<std::int64_t> x(coeffs.size(), 0);
    auto search = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
        if (i == coeffs.size()) {
            if (remaining == 0) out.push_back(x);
            return;
        }
        for (std::int64_t v = 0; v * coeffs[i] <= remaining; ++v) {
            x[i] = v;
            self(self, i + 1, remaining - v * coeffs[i]);
        }
        x[i] = 0;
    };
    search(search, 0, target);
    return out;
}

std::vector<ModVector> generator_words(const Epimorphism& phi) {
    require_valid(phi);
    std::vector<ModVector> words;
    for (std::size_t j = 0; j < phi.k; ++j) words.push_back(phi.column(j));
    return words;
}

std::string word_string(const ModVector& exponents) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "l" + std::to_string(i + 1);
        if (exponents[i] != 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace galcov
