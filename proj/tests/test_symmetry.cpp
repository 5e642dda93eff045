#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcov/bounds.hpp"
#include "galcov/io.hpp"
#include "galcov/symmetry.hpp"
#include "support.hpp"

using namespace galcov;
using testing::lines_of;

namespace {

CoverModel example(int e) {
    const CoverSpec s = example_cover(e);
    return CoverModel::build(s.arrangement, s.phi, s.blown);
}

std::vector<std::string> cycles(const std::vector<Permutation>& perms) {
    std::vector<std::string> out;
    for (const auto& p : perms) out.push_back(cycle_string(p));
    return out;
}

ModMatrix minus_identity(std::size_t k, int m) {
    ModMatrix a = identity_mod(k);
    for (std::size_t i = 0; i < k; ++i) a[i][i] = m - 1;
    return a;
}

CoverModel real_quadrangle(int m) {
    const Arrangement t = Arrangement::build(
        {Line(Vec3{1, 0, 0}), Line(Vec3{0, 1, 0}), Line(Vec3{0, 0, 1}), Line(Vec3{1, 1, 1})});
    if (m == 2) return CoverModel::build(t, Epimorphism{2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}});
    return CoverModel::build(t, Epimorphism{m, 2, {{1, 0}, {0, 1}, {1, 2}, {m - 2, m - 3}}});
}

}  // namespace

TEST_CASE("character-preserving symmetries") {
    const Arrangement h = dual_hesse();
    CHECK(cycles(character_preserving_symmetries(h, enumerate_characters(example_phi(1)))) ==
          std::vector<std::string>{"()"});
    CHECK(cycles(character_preserving_symmetries(h, enumerate_characters(example_phi(2)))) ==
          std::vector<std::string>{"()", "(2 3)(4 6)(7 8)"});
    const Arrangement q = complete_quadrilateral();
    CHECK(cycles(character_preserving_symmetries(q, enumerate_characters(example_phi(3)))) ==
          std::vector<std::string>{"()", "(1 2)(4 5)"});
}

TEST_CASE("deck action of symmetries") {
    const Epimorphism phi2 = example_phi(2);
    const LineSymmetry s{parse_cycles("(2 3)(4 6)(7 8)", 9), true, identity_matrix()};
    CHECK(deck_action_of(s, phi2) == minus_identity(2, 5));
    const LineSymmetry id{identity_permutation(9), false, identity_matrix()};
    CHECK(deck_action_of(id, phi2) == identity_mod(2));

    const LineSymmetry swap{parse_cycles("(1 4)(2 5)(3 6)", 6), false, std::nullopt};
    CHECK(deck_action_of(swap, example_phi(3)) == ModMatrix{{0, 1}, {1, 0}});

    const LineSymmetry bad{parse_cycles("(1 2)", 9), false, std::nullopt};
    CHECK_THROWS_AS(deck_action_of(bad, phi2), std::invalid_argument);
}

TEST_CASE("Klein models") {
    const KleinModel k1 = klein_model(example(1));
    CHECK(k1.order() == 25);
    CHECK_FALSE(k1.has_anti());
    const KleinModel k2 = klein_model(example(2));
    CHECK(k2.order() == 50);
    CHECK(k2.has_anti());
    CHECK(k2.combinatorial_only.empty());
    const KleinModel k3 = klein_model(example(3));
    CHECK(k3.order() == 25 * k3.symmetries.size());
    CHECK(k3.order() == 100);
}

TEST_CASE("deck action is multiplicative and the model is a group") {
    for (int e : {2, 3}) {
        const KleinModel k = klein_model(example(e));
        CHECK(k.symmetries[0].action == identity_mod(k.k));
        for (const auto& a : k.symmetries)
            for (const auto& b : k.symmetries) {
                const LineSymmetry ab = a.symmetry * b.symmetry;
                const auto idx = k.find(ab.perm, ab.anti);
                REQUIRE(idx);
                CHECK(k.symmetries[*idx].action == multiply(a.action, b.action, k.m));
            }
        const auto elems = k.elements();
        CHECK(elems.size() == k.order());
        for (const auto& x : elems) {
            CHECK(k.multiply(x, k.inverse(x)) == k.identity());
            for (const auto& y : elems) {
                CHECK(k.is_anti(k.multiply(x, y)) == (k.is_anti(x) != k.is_anti(y)));
                const auto& z = elems[(x.g[0] * 7 + y.g[1]) % elems.size()];
                CHECK(k.multiply(k.multiply(x, y), z) == k.multiply(x, k.multiply(y, z)));
            }
        }
    }
}

TEST_CASE("real structures of the dual Hesse covers") {
    CHECK(classify_real_structures(example(1), klein_model(example(1))).empty());

    const CoverModel c2 = example(2);
    const KleinModel k2 = klein_model(c2);
    const auto classes = classify_real_structures(c2, k2);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].class_size == 25);
    CHECK(classes[0].real_lines == lines_of({1, 5, 9}));
    CHECK(classes[0].real_blown_centers.size() == 4);
    REQUIRE(classes[0].topology);
    CHECK(classes[0].topology->euler == -3);
    CHECK(classes[0].topology->betti == std::array<std::int64_t, 3>{1, 5, 1});
    CHECK(classes[0].topology->total() == 7);

    const InvariantReport inv = invariants(c2);
    const auto smith = smith_total(hodge_from_invariants(inv.k_squared, inv.euler, 0));
    CHECK(smith == 111);
    CHECK(classes[0].topology->total() < smith);
}

TEST_CASE("real structures of the quadrilateral cover") {
    const CoverModel c3 = example(3);
    const KleinModel k3 = klein_model(c3);
    const auto classes = classify_real_structures(c3, k3);
    CHECK(classes.size() == 2);
    std::set<std::vector<std::size_t>> fingerprints;
    for (const auto& c : classes) fingerprints.insert(c.real_lines);
    CHECK(fingerprints.count(lines_of({1, 2, 3, 4, 5, 6})) == 1);
    CHECK(fingerprints.count(lines_of({3, 6})) == 1);
    for (const auto& c : classes) {
        if (c.real_lines.size() == 6) {
            REQUIRE(c.topology);
            CHECK(c.real_blown_centers.size() == 4);
            CHECK(c.topology->total() == 7);
        }
    }
}

TEST_CASE("involution classes partition the anti-involutions") {
    for (int e : {2, 3}) {
        const CoverModel c = example(e);
        const KleinModel k = klein_model(c);
        std::size_t involutions = 0;
        for (const auto& x : k.elements())
            involutions += k.is_anti(x) && k.multiply(x, x) == k.identity();
        const auto classes = classify_real_structures(c, k);
        std::size_t total = 0;
        for (const auto& cl : classes) {
            CHECK(k.multiply(cl.representative, cl.representative) == k.identity());
            CHECK(k.is_anti(cl.representative));
            total += cl.class_size;
        }
        CHECK(total == involutions);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                bool conjugate = false;
                for (const auto& h : k.elements())
                    conjugate = conjugate || k.multiply(k.multiply(h, classes[i].representative), k.inverse(h)) ==
                                                 classes[j].representative;
                CHECK_FALSE(conjugate);
            }
    }
}

TEST_CASE("real part topology") {
    const CoverModel t = real_quadrangle(5);
    const KleinModel k = klein_model(t);
    const auto anti = k.find(identity_permutation(4), true);
    REQUIRE(anti);
    const KleinElement conj{*anti, ModVector{0, 0}};
    REQUIRE(t.smooth());
    const RealTopology top = real_part_topology(t, k, conj);
    CHECK(top.euler == 1);
    CHECK(top.total() == 3);

    const CoverModel even = real_quadrangle(2);
    const KleinModel ke = klein_model(even);
    const auto anti2 = ke.find(identity_permutation(4), true);
    REQUIRE(anti2);
    CHECK_THROWS_AS(real_part_topology(even, ke, KleinElement{*anti2, ModVector{0, 0, 0}}), std::domain_error);

    CHECK_THROWS_AS(real_part_topology(t, k, k.identity()), std::domain_error);
}
