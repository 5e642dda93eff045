#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcov/characters.hpp"
#include "galcov/homology.hpp"
#include "galcov/io.hpp"
#include "support.hpp"

using namespace galcov;
using testing::lines_of;

namespace {

std::size_t point_of(const Arrangement& arr, std::initializer_list<std::size_t> one_based) {
    return *arr.find_point(lines_of(one_based));
}

}  // namespace

TEST_CASE("validate_epimorphism") {
    CHECK(validate_epimorphism(example_phi(1)).valid());
    CHECK(validate_epimorphism(example_phi(2)).valid());
    CHECK(validate_epimorphism(example_phi(3)).valid());

    Epimorphism zero{5, 2, std::vector<ModVector>(9, ModVector{0, 0})};
    const auto r = validate_epimorphism(zero);
    CHECK_FALSE(r.valid());
    CHECK(r.zero_sum);
    CHECK_FALSE(r.surjective);

    Epimorphism unbalanced = example_phi(1);
    unbalanced.rows[0] = {2, 1};
    CHECK_FALSE(validate_epimorphism(unbalanced).zero_sum);
    CHECK_THROWS_AS(require_valid(unbalanced), std::invalid_argument);

    Epimorphism out_of_range = example_phi(1);
    out_of_range.rows[0] = {6, 1};
    CHECK_FALSE(validate_epimorphism(out_of_range).valid());
}

TEST_CASE("eps_class") {
    const Arrangement h = dual_hesse();
    const auto eps = eps_class(h.points()[point_of(h, {1, 2, 3})], 9);
    CHECK(eps == std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0, 0});
    CHECK(example_phi(1).apply(eps) == ModVector{3, 2});

    const Arrangement q = complete_quadrilateral();
    CHECK(eps_class(q.points()[point_of(q, {1, 4})], 6) == std::vector<int>{1, 0, 0, 1, 0, 0});

    // phi(eps_p) is the sum of the incident rows at every point
    const Epimorphism phi = example_phi(2);
    for (const auto& p : h.points()) {
        ModVector sum(2, 0);
        for (auto i : p.incident)
            for (int j = 0; j < 2; ++j) sum[j] = (sum[j] + phi.rows[i][j]) % 5;
        CHECK(phi.apply(eps_class(p, 9)) == sum);
    }
}

TEST_CASE("independence") {
    CHECK(independence({{1, 0}, {0, 1}}, 2, 5));
    CHECK_FALSE(independence({{1, 2}, {2, 4}}, 2, 5));
    CHECK(independence({{4, 1}, {1, 0}}, 2, 5));
    CHECK_THROWS_AS(independence({{1, 0}, {0, 1}}, 2, 4), std::invalid_argument);
}

TEST_CASE("smoothness certificates") {
    const Arrangement h = dual_hesse();
    const auto cert1 = smoothness_check(h, example_phi(1), default_blowup(h));
    CHECK(cert1.smooth());
    CHECK(cert1.checks.size() == 12 * 3);

    const Arrangement q = complete_quadrilateral();
    const auto cert3 = smoothness_check(q, example_phi(3), default_blowup(q));
    CHECK(cert3.smooth());
    std::size_t doubles = 0;
    for (const auto& c : cert3.checks) doubles += !c.blown;
    CHECK(doubles == 3);
    CHECK(cert3.checks.size() == 4 * 3 + 3);

    Epimorphism bad{5, 2, {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 4}, {2, 0}, {0, 0}, {0, 0}, {0, 0}}};
    REQUIRE(validate_epimorphism(bad).valid());
    const std::size_t p123 = point_of(h, {1, 2, 3});
    const auto cert = smoothness_check(h, bad, {p123});
    CHECK_FALSE(cert.smooth());
    bool failed_at_p123 = false;
    for (const auto& c : cert.checks) {
        if (c.point == p123) {
            CHECK(c.first == ModVector{3, 0});
            CHECK_FALSE(c.independent);
            failed_at_p123 = true;
        }
    }
    CHECK(failed_at_p123);
}

TEST_CASE("blowing up more points never repairs an untouched point") {
    std::mt19937 rng(3);
    const Arrangement h = dual_hesse();
    const auto all = default_blowup(h);
    for (int trial = 0; trial < 20; ++trial) {
        const Epimorphism phi = testing::random_phi(rng, 9, 5, 2);
        std::vector<std::size_t> small, large;
        for (std::size_t p : all) {
            const int pick = static_cast<int>(rng() % 3);
            if (pick == 0) small.push_back(p);
            if (pick <= 1) large.push_back(p);
        }
        std::sort(small.begin(), small.end());
        std::sort(large.begin(), large.end());
        const auto before = smoothness_check(h, phi, small);
        const auto after = smoothness_check(h, phi, large);
        auto failing = [](const SmoothnessCertificate& c, std::size_t p) {
            for (const auto& chk : c.checks)
                if (chk.point == p && !chk.independent) return true;
            return false;
        };
        for (std::size_t p : small) CHECK(failing(before, p) == failing(after, p));
        for (std::size_t p = 0; p < h.points().size(); ++p) {
            const bool untouched = std::find(large.begin(), large.end(), p) == large.end();
            if (untouched) CHECK(failing(before, p) == failing(after, p));
        }
    }
}

TEST_CASE("deck group") {
    const DeckGroup g1 = galois_kernel(example_phi(1));
    CHECK(g1.order() == 25);
    CHECK(g1.kernel_order() == 5 * 5 * 5 * 5 * 5 * 5);
    CHECK(g1.kernel_basis.size() == 6);

    const DeckGroup g2 = galois_kernel(Epimorphism{2, 1, {{1}, {1}}});
    CHECK(g2.order() == 2);
    CHECK(g2.kernel_order() == 1);

    Epimorphism composite{4, 1, {{1}, {3}}};
    CHECK_THROWS_AS(galois_kernel(composite), std::invalid_argument);
}

TEST_CASE("kernel is a subgroup annihilating every character") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const bool hesse = trial % 2 == 0;
        const std::size_t n = hesse ? 9 : 6;
        const Epimorphism phi = testing::random_phi(rng, n, 5, 1 + trial % 3);
        const DeckGroup g = galois_kernel(phi);
        CHECK(g.order() == static_cast<std::size_t>(std::pow(5, phi.k)));
        const CharacterSet chars = enumerate_characters(phi);
        CHECK(chars.size() == g.order());
        for (const auto& gamma : g.kernel_basis) {
            CHECK(g.in_kernel(gamma));
            for (const auto& a : chars.elements) {
                long long pairing = 0;
                for (std::size_t i = 0; i + 1 < n; ++i) pairing += static_cast<long long>(gamma[i]) * a[i];
                CHECK(pairing % 5 == 0);
            }
        }
        for (const auto& x : g.kernel_basis)
            for (const auto& y : g.kernel_basis) {
                ModVector s(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + 3 * y[i]) % 5;
                CHECK(g.in_kernel(s));
            }
    }
}
