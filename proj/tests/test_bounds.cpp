#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcov/bounds.hpp"
#include "support.hpp"

using namespace galcov;

namespace {

HodgeData hodge(std::int64_t h10, std::int64_t h20, std::int64_t h11, std::int64_t nu = 0,
                std::int64_t p_minus = 0) {
    HodgeData h;
    h.h10 = h10;
    h.h20 = h20;
    h.h11 = h11;
    h.nu = nu;
    h.p_minus = p_minus;
    h.p_plus = h11 - 1 - p_minus;
    return h;
}

}  // namespace

TEST_CASE("Hodge data from K^2 and e") {
    // chi = (K^2 + e)/12, p_g = chi - 1 + q, b2 = e - 2 + 4q = 2 p_g + h11
    const std::int64_t chi = (333 + 111) / 12;
    const std::int64_t pg = chi - 1;
    const std::int64_t h11 = (111 - 2) - 2 * pg;
    const HodgeData h = hodge_from_invariants(333, 111, 0);
    CHECK(h.h20 == pg);
    CHECK(h.h20 == 36);
    CHECK(h.h11 == h11);
    CHECK(h.h11 == 37);
    CHECK(h.problems().empty());
    const HodgeData h3 = hodge_from_invariants(45, 15, 0);
    CHECK(h3.h20 == 4);
    CHECK(h3.h11 == 5);
    CHECK(smith_total(h3) == 15);
    CHECK_THROWS_AS(hodge_from_invariants(10, 1, 0), std::domain_error);
}

TEST_CASE("Smith total") {
    CHECK(smith_total(hodge(0, 36, 37)) == 111);
    HodgeData plane = hodge(0, 0, 1);
    CHECK(smith_total(plane) == 3);
    plane.components = {{1, 1, 1}};
    CHECK(is_maximal(plane));
    HodgeData x2 = hodge(0, 36, 37);
    x2.components = {{1, 5, 1}};
    CHECK(real_betti_total(x2) == 7);
    CHECK_FALSE(is_maximal(x2));
    CHECK(smith_total(x2) >= real_betti_total(x2));
}

TEST_CASE("Lefschetz relation") {
    HodgeData x2 = hodge(0, 36, 37);
    x2.components = {{1, 5, 1}};
    CHECK(lefschetz_relation(x2) == -4);
    CHECK(lefschetz_relation(hodge(0, 36, 37)) == -1);
    HodgeData bad = hodge(0, 0, 1);
    bad.components = {{1, 9, 1}};
    CHECK_THROWS_AS(lefschetz_relation(bad), std::domain_error);
}

TEST_CASE("MY identity") {
    CHECK(my_identity(hodge(0, 36, 37)));
    CHECK(my_identity(hodge(0, 0, 1)));
    CHECK_FALSE(my_identity(hodge(0, 3, 3)));
}

TEST_CASE("h20 lower bound") {
    CHECK(h20_lower_bound(hodge(0, 0, 1)) == 4);
    HodgeData nu1 = hodge(0, 0, 1, 1);
    CHECK(h20_lower_bound(nu1) == 6);
    HodgeData p2 = hodge(0, 2, 3, 0, 0);
    REQUIRE(p2.p_plus == 2);
    CHECK(h20_lower_bound(p2) == 14);
    CHECK_THROWS_AS(h20_lower_bound(hodge(0, 3, 3)), std::domain_error);
}

TEST_CASE("three cross-cap components") {
    for (std::int64_t h20 = 0; h20 <= 30; ++h20) {
        for (std::int64_t pm = 0; pm <= h20; ++pm) {
            const HodgeData h = hodge(0, h20, h20 + 1, 0, pm);
            for (std::int64_t k3 = 0; k3 < 3; ++k3) CHECK_FALSE(crosscap_component_bound(h, k3).feasible);
            const auto v = crosscap_component_bound(h, 3);
            CHECK(v.feasible == (h.h11 <= pm + 1));
            CHECK(v.minimum_k3 == 3);
        }
    }
    const auto v = crosscap_component_bound(hodge(0, 4, 5, 0, 4), 3);
    CHECK(v.feasible);
    CHECK(v.boundary);
    CHECK(v.reduced.find("h11 <= p_minus + 1") != std::string::npos);
}

TEST_CASE("beta1 of maximal surfaces") {
    std::mt19937 rng(12);
    int checked = 0, my_checked = 0;
    while (checked < 200) {
        HodgeData h;
        h.h10 = rng() % 4;
        h.nu = rng() % 3;
        h.h20 = rng() % 20;
        h.h11 = rng() % 3 == 0 ? h.h20 + h.h10 + 1 : 1 + rng() % 30;
        h.p_minus = rng() % h.h11;
        h.p_plus = h.h11 - 1 - h.p_minus;
        const std::int64_t trace = h.p_plus - h.p_minus;
        const std::int64_t s = smith_total(h);
        // 2k - B1 = 1 + trace and 2k + B1 = S
        if ((s + 1 + trace) % 4 != 0) continue;
        const std::int64_t k = (s + 1 + trace) / 4, b1 = (s - 1 - trace) / 2;
        if (k < 1 || b1 < 0) continue;
        h.components.assign(static_cast<std::size_t>(k), {1, 0, 1});
        h.components[0][1] = b1;
        REQUIRE(is_maximal(h));
        CHECK(lefschetz_relation(h) == trace);
        CHECK(maximal_beta1(h) == b1);
        if (my_identity(h)) {
            CHECK(maximal_beta1_my(h) == b1);
            ++my_checked;
        }
        ++checked;
    }
    CHECK(my_checked > 0);
}

TEST_CASE("small components") {
    CHECK(small_component_exclusion({1, 0, 1}, true) == ComponentVerdict::rejected);
    CHECK(small_component_exclusion({1, 1, 1}, true) == ComponentVerdict::rejected);
    CHECK(small_component_exclusion({1, 2, 1}, true) == ComponentVerdict::rejected);
    CHECK(small_component_exclusion({1, 3, 1}, true) == ComponentVerdict::accepted);
    CHECK(small_component_exclusion({1, 0, 1}, false) == ComponentVerdict::not_applicable);
}

TEST_CASE("fake plane involution") {
    const FakePlaneReport r = fake_plane_involution_check();
    CHECK(r.fixed_curve_excluded);
    CHECK(r.lefschetz_number == 3);
    CHECK(r.det_at_fixed_point == Rational(4));
    CHECK(r.holomorphic_sum == Rational(3, 4));
    CHECK(r.holomorphic_sum != r.holomorphic_expected);
    CHECK(r.contradiction);
    CHECK(r.steps.size() == 3);
    for (const auto& [ratio, values] : r.fixed_curve_samples) {
        CHECK(values.first < Rational(0));
        CHECK(values.second > Rational(0));
    }
}

TEST_CASE("consistency problems") {
    HodgeData h = hodge(0, 1, 2);
    CHECK(h.problems().empty());
    h.p_plus = 5;
    CHECK_FALSE(h.problems().empty());
}
