#include "galcov/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galcov {

std::vector<Permutation> character_preserving_symmetries(const Arrangement& arr, const CharacterSet& chars) {
    std::vector<Permutation> out;
    for (auto& perm : combinatorial_automorphisms(arr))
        if (character_action(perm, chars) == chars) out.push_back(std::move(perm));
    return out;
}

ModVector apply(const ModMatrix& a, const ModVector& v, int m) {
    ModVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += std::int64_t(a[i][j]) * v[j];
        out[i] = mod(s, m);
    }
    return out;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, int m) {
    const std::size_t k = b.empty() ? 0 : b.front().size();
    ModMatrix r(a.size(), ModVector(k, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < b.size(); ++l) s += std::int64_t(a[i][l]) * b[l][j];
            r[i][j] = mod(s, m);
        }
    return r;
}

ModMatrix identity_mod(std::size_t k) {
    ModMatrix r(k, ModVector(k, 0));
    for (std::size_t i = 0; i < k; ++i) r[i][i] = 1;
    return r;
}

ModMatrix deck_action_of(const LineSymmetry& sym, const Epimorphism& phi) {
    require_valid(phi);
    // column j of P: coordinates of (column_j o perm)
    ModMatrix p(phi.k, ModVector(phi.k, 0));
    for (std::size_t j = 0; j < phi.k; ++j) {
        auto c = character_coordinates(phi, permute(sym.perm, phi.column(j)));
        if (!c) throw std::invalid_argument("symmetry " + sym.str() + " does not preserve the character set");
        for (std::size_t i = 0; i < phi.k; ++i) p[i][j] = (*c)[i];
    }
    const int sign = sym.anti ? -1 : 1;
    ModMatrix action(phi.k, ModVector(phi.k, 0));
    for (std::size_t i = 0; i < phi.k; ++i)
        for (std::size_t j = 0; j < phi.k; ++j) action[i][j] = mod(sign * p[j][i], phi.m);
    return action;
}

std::size_t KleinModel::deck_order() const {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<std::size_t>(m);
    return r;
}

bool KleinModel::has_anti() const {
    return std::any_of(symmetries.begin(), symmetries.end(),
                       [](const ExternalSymmetry& s) { return s.symmetry.anti; });
}

KleinElement KleinModel::identity() const { return {0, ModVector(k, 0)}; }

void KleinModel::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < symmetries.size(); ++i)
        index_[{symmetries[i].symmetry.perm, symmetries[i].symmetry.anti}] = i;
}

std::optional<std::size_t> KleinModel::find(const Permutation& perm, bool anti) const {
    auto it = index_.find({perm, anti});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

KleinElement KleinModel::multiply(const KleinElement& a, const KleinElement& b) const {
    const auto& sa = symmetries.at(a.sym);
    const auto& sb = symmetries.at(b.sym);
    auto s = find(compose(sa.symmetry.perm, sb.symmetry.perm), sa.symmetry.anti != sb.symmetry.anti);
    if (!s) throw std::logic_error("realized symmetries are not closed under composition");
    // (g1 s1)(g2 s2) = (g1 + s1 g2 s1^{-1}) s1 s2
    ModVector g = apply(sa.action, b.g, m);
    for (std::size_t i = 0; i < k; ++i) g[i] = mod(g[i] + a.g[i], m);
    return {*s, std::move(g)};
}

KleinElement KleinModel::inverse(const KleinElement& a) const {
    const auto& sa = symmetries.at(a.sym);
    auto s = find(galcov::inverse(sa.symmetry.perm), sa.symmetry.anti);
    if (!s) throw std::logic_error("realized symmetries are not closed under inversion");
    ModVector g = apply(symmetries[*s].action, a.g, m);
    for (auto& v : g) v = mod(-v, m);
    return {*s, std::move(g)};
}

std::vector<KleinElement> KleinModel::elements() const {
    std::vector<KleinElement> out;
    auto deck = all_vectors(m, k);
    for (std::size_t s = 0; s < symmetries.size(); ++s)
        for (const auto& g : deck) out.push_back({s, g});
    return out;
}

KleinModel klein_model(const CoverModel& cover) {
    cover.require_smooth();
    const auto& arr = cover.arrangement();
    const auto& phi = cover.phi();
    KleinModel model;
    model.m = phi.m;
    model.k = phi.k;
    auto chars = enumerate_characters(phi);
    for (const auto& perm : character_preserving_symmetries(arr, chars)) {
        bool realized = false;
        for (bool anti : {false, true}) {
            auto matrix = realize_symmetry(arr, perm, anti);
            if (!matrix) continue;
            realized = true;
            LineSymmetry sym{perm, anti, matrix};
            model.symmetries.push_back({sym, deck_action_of(sym, phi)});
        }
        if (!realized) model.combinatorial_only.push_back(perm);
    }
    if (model.symmetries.empty() || !is_identity(model.symmetries.front().symmetry.perm) ||
        model.symmetries.front().symmetry.anti)
        throw std::logic_error("identity symmetry missing from the model");
    model.reindex();
    return model;
}

namespace {

bool is_involution(const KleinModel& model, const KleinElement& x) {
    return model.multiply(x, x) == model.identity();
}

}  // namespace

RealTopology real_part_topology(const CoverModel& cover, const KleinModel& model, const KleinElement& element) {
    if (cover.phi().m % 2 == 0) throw std::domain_error("real locus shortcut needs an odd modulus");
    if (!model.is_anti(element) || !is_involution(model, element))
        throw std::domain_error("element is not an anti-holomorphic involution");
    const auto& ext = model.symmetries.at(element.sym);
    ModMatrix minus_id = identity_mod(model.k);
    for (auto& row : minus_id)
        for (auto& v : row) v = mod(-v, model.m);
    if (ext.action != minus_id)
        throw std::domain_error("involution permutes the generator words; real locus not computed");
    std::int64_t real_centers = 0;
    for (auto p : fixed_points_of(cover.arrangement(), ext.symmetry))
        if (std::binary_search(cover.blown().begin(), cover.blown().end(), p)) ++real_centers;
    return {1 - real_centers, {1, 1 + real_centers, 1}};
}

std::vector<RealStructureClass> classify_real_structures(const CoverModel& cover, const KleinModel& model) {
    std::vector<KleinElement> involutions;
    for (const auto& x : model.elements())
        if (model.is_anti(x) && is_involution(model, x)) involutions.push_back(x);

    const auto all = model.elements();
    std::set<KleinElement> seen;
    std::vector<RealStructureClass> classes;
    for (const auto& x : involutions) {
        if (seen.count(x)) continue;
        std::set<KleinElement> orbit;
        for (const auto& y : all) orbit.insert(model.multiply(model.multiply(y, x), model.inverse(y)));
        seen.insert(orbit.begin(), orbit.end());

        RealStructureClass cls;
        cls.representative = *orbit.begin();
        cls.class_size = orbit.size();
        const auto& sym = model.symmetries.at(cls.representative.sym).symmetry;
        for (std::size_t i = 0; i < sym.perm.size(); ++i)
            if (sym.perm[i] == i) cls.real_lines.push_back(i);
        for (auto p : fixed_points_of(cover.arrangement(), sym))
            if (std::binary_search(cover.blown().begin(), cover.blown().end(), p)) cls.real_blown_centers.push_back(p);
        try {
            cls.topology = real_part_topology(cover, model, cls.representative);
        } catch (const std::domain_error&) {
            cls.topology = std::nullopt;
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const RealStructureClass& a, const RealStructureClass& b) {
        return a.representative < b.representative;
    });
    return classes;
}

}  // namespace galcov
