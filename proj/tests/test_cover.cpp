#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcov/cover.hpp"
#include "galcov/io.hpp"
#include "support.hpp"

using namespace galcov;

namespace {

CoverModel example(int e) {
    const CoverSpec s = example_cover(e);
    return CoverModel::build(s.arrangement, s.phi, s.blown);
}

Arrangement triangle() {
    return Arrangement::build({Line(Vec3{1, 0, 0}), Line(Vec3{0, 1, 0}), Line(Vec3{0, 0, 1})});
}

}  // namespace

TEST_CASE("cover canonical class") {
    const CoverModel c1 = example(1);
    const auto K1 = cover_canonical(c1);
    CHECK(K1.h() == Rational(21, 5));
    for (std::size_t p : c1.blown()) CHECK(K1.e(p) == Rational(-3, 5));

    const CoverModel c3 = example(3);
    const auto K3 = cover_canonical(c3);
    CHECK(K3.h() == Rational(9, 5));
    CHECK(c3.blown().size() == 4);
    for (std::size_t p : c3.blown()) CHECK(K3.e(p) == Rational(-3, 5));

    const CoverModel trivial = CoverModel::build(triangle(), Epimorphism{1, 1, {{0}, {0}, {0}}});
    CHECK(cover_canonical(trivial) == canonical_class(trivial.blown()));
}

TEST_CASE("dual Hesse covers") {
    for (int e : {1, 2}) {
        const CoverModel c = example(e);
        REQUIRE(c.smooth());
        const InvariantReport r = invariants(c);
        CHECK(r.degree == 25);
        CHECK(r.k_squared == 333);
        CHECK(r.euler == 111);
        CHECK(r.chi == Rational(37));
        CHECK(r.my_defect == 0);
        CHECK(r.curves.size() == 21);
        for (const auto& cv : r.curves) {
            const bool line = cv.kind == BranchComponent::Kind::line;
            CHECK(cv.ramification == 5);
            CHECK(cv.self_intersection == (line ? -3 : -1));
            CHECK(cv.canonical_degree == (line ? 9 : 3));
            CHECK(cv.genus == (line ? 4 : 2));
            CHECK(cv.components == 1);
        }
    }
}

TEST_CASE("Euler number by the line/centre grouping") {
    // 25 e(open) + 5 sum e(open C_i) + 5 sum e(open D_p) + #(C_i meets D_p), counted from incidences
    for (int e : {1, 2}) {
        const CoverModel c = example(e);
        const auto& arr = c.arrangement();
        const std::int64_t n = 9, blown = static_cast<std::int64_t>(c.blown().size());
        std::int64_t incidences = 0;
        for (std::size_t i = 0; i < arr.size(); ++i) incidences += static_cast<std::int64_t>(arr.points_on(i).size());
        const std::int64_t open = (3 + blown) - n * 2 - blown * 2 + incidences;
        const std::int64_t per_line = incidences / n, per_centre = incidences / blown;
        const std::int64_t euler = 25 * open + 5 * n * (2 - per_line) + 5 * blown * (2 - per_centre) + incidences;
        CHECK(open == 9);
        CHECK(euler == 111);
        CHECK(invariants(c).euler == euler);
    }
}

TEST_CASE("quadrilateral cover") {
    const CoverModel c = example(3);
    REQUIRE(c.smooth());
    const InvariantReport r = invariants(c);
    CHECK(r.k_squared == 45);
    CHECK(r.euler == 15);
    CHECK(r.chi == Rational(5));
    for (const auto& cv : r.curves) {
        CHECK(cv.genus >= 0);
        CHECK(2 * cv.genus - 2 == (cv.self_intersection + cv.canonical_degree) / cv.components);
    }
}

TEST_CASE("Noether integrality on builtin covers") {
    for (int e : {1, 2, 3}) {
        const InvariantReport r = invariants(example(e));
        CHECK((r.k_squared + r.euler) % 12 == 0);
        CHECK(r.chi.is_integer());
    }
}

TEST_CASE("unbranched cover reproduces the blown plane") {
    const CoverModel c = CoverModel::build(triangle(), Epimorphism{1, 1, {{0}, {0}, {0}}});
    const InvariantReport r = invariants(c);
    CHECK(r.degree == 1);
    CHECK(r.k_squared == 9);
    CHECK(r.euler == 3);
    CHECK(r.curves.empty());
    CHECK_THROWS_AS(three_canonical_decomposition(c), std::domain_error);
}

TEST_CASE("singular covers are refused") {
    const Arrangement h = dual_hesse();
    Epimorphism bad{5, 2, {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 4}, {2, 0}, {0, 0}, {0, 0}, {0, 0}}};
    const CoverModel c = CoverModel::build(h, bad);
    CHECK_FALSE(c.smooth());
    CHECK_THROWS_AS(invariants(c), std::domain_error);
    CHECK_THROWS_AS(c.require_smooth(), std::domain_error);
}

TEST_CASE("three-canonical decomposition") {
    const auto d1 = three_canonical_decomposition(example(1));
    CHECK(d1.base_identity);
    CHECK(d1.integral);
    CHECK(d1.all_positive);
    const CoverModel c1 = example(1);
    for (std::size_t i = 0; i < c1.branch().size(); ++i)
        CHECK(d1.curve_coeffs[i] == Rational(c1.branch()[i].kind == BranchComponent::Kind::line ? 7 : 12));

    const auto d3 = three_canonical_decomposition(example(3));
    CHECK(d3.all_positive);
    CHECK_FALSE(d3.base_identity);
    for (const auto& x : d3.curve_coeffs) CHECK(x == Rational(9, 2));
}

TEST_CASE("invariant curve filter") {
    CHECK(invariant_curve_filter({7, 12}, 27).empty());
    CHECK(invariant_curve_filter({7, 12}, 9).empty());
    CHECK(invariant_curve_filter({7, 12}, 19) == std::vector<std::vector<std::int64_t>>{{1, 1}});
    CHECK(invariant_curve_filter({7, 12}, 0) == std::vector<std::vector<std::int64_t>>{{0, 0}});
    CHECK(invariant_curve_filter({2, 3}, 6).size() == 2);
    CHECK_THROWS_AS(invariant_curve_filter({0, 3}, 6), std::invalid_argument);
    // brute-force scan
    for (std::int64_t t = 0; t <= 60; ++t) {
        std::size_t count = 0;
        for (std::int64_t a = 0; 7 * a <= t; ++a)
            for (std::int64_t b = 0; 7 * a + 12 * b <= t; ++b) count += 7 * a + 12 * b == t;
        CHECK(invariant_curve_filter({7, 12}, t).size() == count);
    }
}

TEST_CASE("generator words") {
    const auto w2 = generator_words(example_phi(2));
    CHECK(word_string(w2[0]) == "l2 l3 l5 l7 l8");
    CHECK(word_string(w2[1]) == "l1 l4 l6 l7^2 l8^2 l9^3");
    const auto w3 = generator_words(example_phi(3));
    CHECK(word_string(w3[0]) == "l1 l2 l3 l6^2");
    CHECK(word_string(w3[1]) == "l3^2 l4 l5 l6");
    const auto w1 = generator_words(example_phi(1));
    CHECK(word_string(w1[0]) == "l1 l2 l3 l4^3 l5^3 l9");
}
