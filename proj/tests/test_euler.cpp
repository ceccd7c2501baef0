#include <doctest.h>

#include <random>

#include "qb/euler.hpp"

using namespace qb;

namespace {

Quiver a2() {
    return {{"v1", "v2"}, {{"a", "v1", "v2"}}};
}

Quiver single() { return {{"v1"}, {}}; }

TypeVector tv(std::vector<VertexType> e) { return {std::move(e)}; }

}  // namespace

TEST_CASE("riemann roch chi") {
    CHECK(riemann_roch_chi(1, 0, 1, 0, GenusContext(0)) == 1);
    CHECK(riemann_roch_chi(1, 3, 1, 0, GenusContext(0)) == -2);
    CHECK(riemann_roch_chi(2, 3, 2, 3, GenusContext(2)) == -4);
}

TEST_CASE("euler form") {
    SUBCASE("single vertex reduces to riemann roch") {
        EulerSummary s = euler_form(single(), tv({{2, 3}}), tv({{2, 3}}), GenusContext(2));
        CHECK(s.chi == -4);
        REQUIRE(s.vertex_contributions.size() == 1);
        CHECK(s.vertex_contributions[0] == -4);
        CHECK(s.arrow_contributions.empty());
    }
    SUBCASE("A2, genus 0, t = ((1,0),(1,1))") {
        TypeVector t = tv({{1, 0}, {1, 1}});
        EulerSummary s = euler_form(a2(), t, t, GenusContext(0));
        CHECK(s.chi == 0);
        CHECK(s.vertex_contributions == std::vector<long long>{1, 1});
        CHECK(s.arrow_contributions == std::vector<long long>{2});
    }
    SUBCASE("A2, genus 0, t = ((1,3),(1,0))") {
        TypeVector t = tv({{1, 3}, {1, 0}});
        EulerSummary s = euler_form(a2(), t, t, GenusContext(0));
        CHECK(s.chi == 4);
        CHECK(s.arrow_contributions == std::vector<long long>{-2});
    }
    SUBCASE("breakdown sums to chi") {
        TypeVector t = tv({{2, -1}, {3, 2}});
        TypeVector t2 = tv({{1, 4}, {2, -3}});
        EulerSummary s = euler_form(a2(), t, t2, GenusContext(3));
        long long total = 0;
        for (auto v : s.vertex_contributions) total += v;
        for (auto a : s.arrow_contributions) total -= a;
        CHECK(s.chi == total);
    }
    SUBCASE("vertex-set mismatch throws") {
        CHECK_THROWS_AS(euler_form(a2(), tv({{1, 0}}), tv({{1, 0}}), GenusContext(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("expected dimension") {
    CHECK(expected_dimension(single(), tv({{2, 7}}), GenusContext(2)) == 5);
    CHECK(expected_dimension(a2(), tv({{1, 0}, {1, 1}}), GenusContext(0)) == 1);
    CHECK(expected_dimension(single(), tv({{1, 0}}), GenusContext(0)) == 0);
    CHECK_THROWS_AS(expected_dimension(single(), tv({{0, 0}}), GenusContext(0)),
                    std::invalid_argument);
}

TEST_CASE("single vertex no arrows matches r^2(g-1)+1") {
    for (long long r = 1; r <= 5; ++r)
        for (long long g = 0; g <= 4; ++g)
            for (long long d = -2; d <= 2; ++d)
                CHECK(expected_dimension(single(), tv({{r, d}}), GenusContext(g)) ==
                      r * r * (g - 1) + 1);
}

TEST_CASE("extension additivity") {
    SUBCASE("zero summand") {
        CHECK(extension_additivity_check(a2(), tv({{0, 0}, {0, 0}}), tv({{1, 2}, {2, -1}}),
                                         GenusContext(3)));
    }
    SUBCASE("single vertex, genus 1") {
        CHECK(extension_additivity_check(single(), tv({{1, 0}}), tv({{1, 1}}), GenusContext(1)));
    }
    SUBCASE("A2, genus 0, complementary vertex types") {
        CHECK(extension_additivity_check(a2(), tv({{1, 0}, {0, 0}}), tv({{0, 0}, {1, 1}}),
                                         GenusContext(0)));
    }
}

TEST_CASE("euler form is bilinear") {
    std::mt19937_64 rng(17);
    auto r = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    Quiver q{{"v1", "v2", "v3"},
             {{"a", "v1", "v2"}, {"b", "v2", "v3"}, {"c", "v3", "v1"}, {"l", "v2", "v2"}}};
    auto rand_t = [&]() {
        TypeVector t;
        for (int i = 0; i < 3; ++i) t.entries.push_back({r(0, 3), r(-4, 4)});
        return t;
    };
    for (int it = 0; it < 200; ++it) {
        GenusContext g(r(0, 4));
        TypeVector s = rand_t(), t1 = rand_t(), t2 = rand_t();
        CHECK(euler_form(q, s, t1 + t2, g).chi ==
              euler_form(q, s, t1, g).chi + euler_form(q, s, t2, g).chi);
        CHECK(euler_form(q, t1 + t2, s, g).chi ==
              euler_form(q, t1, s, g).chi + euler_form(q, t2, s, g).chi);
        CHECK(extension_additivity_check(q, t1, t2, g));
    }
}
