#include <doctest.h>

#include <algorithm>
#include <random>

#include "qb/quiver.hpp"

using namespace qb;

namespace {

Quiver a2() {
    return {{"v1", "v2"}, {{"a", "v1", "v2"}}};
}

TypeVector tv(std::vector<VertexType> e) { return {std::move(e)}; }

}  // namespace

TEST_CASE("quiver validation") {
    CHECK(validate_quiver(a2()).ok);

    Quiver loop{{"v1"}, {{"a", "v1", "v1"}}};
    ValidationReport rep = validate_quiver(loop);
    CHECK(rep.ok);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0] == "loop present at vertex 'v1'");

    Quiver parallel{{"v1", "v2"}, {{"a", "v1", "v2"}, {"b", "v1", "v2"}}};
    rep = validate_quiver(parallel);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.errors.size() == 1);
    CHECK(rep.errors[0].find("parallel arrows violate paper hypothesis") != std::string::npos);

    Quiver dangling{{"v1"}, {{"a", "v1", "v9"}}};
    CHECK_FALSE(validate_quiver(dangling).ok);
    CHECK_THROWS_AS(require_valid_quiver(dangling), std::invalid_argument);
}

TEST_CASE("alpha degree") {
    CHECK(alpha_degree(tv({{2, 3}}), {{Rat(0)}}) == 3);
    CHECK(alpha_degree(tv({{1, 0}, {1, 1}}), {{Rat(0), Rat(1)}}) == 2);
    CHECK(alpha_degree(tv({{0, 0}, {0, 0}}), {{Rat(5), Rat(7)}}) == 0);
    CHECK_THROWS_AS(alpha_degree(tv({{1, 0}}), {{Rat(0), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("alpha slope") {
    CHECK(alpha_slope(tv({{2, 3}}), {{Rat(0)}}) == Rat(3, 2));
    TypeVector t = tv({{1, 0}, {1, 1}});
    CHECK(alpha_slope(t, {{Rat(0), Rat(1)}}) == 1);
    CHECK(alpha_slope(t, {{Rat(5), Rat(6)}}) == 6);
    CHECK_THROWS_AS(alpha_slope(tv({{0, 0}}), {{Rat(0)}}), std::invalid_argument);
}

TEST_CASE("alpha degree is additive") {
    std::mt19937_64 rng(7);
    auto r = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + rng() % 3;
        TypeVector t1, t2;
        StabilityParameter alpha;
        for (std::size_t i = 0; i < n; ++i) {
            t1.entries.push_back({r(0, 3), r(-4, 4)});
            t2.entries.push_back({r(0, 3), r(-4, 4)});
            alpha.weights.push_back(make_rat(r(-9, 9), r(1, 5)));
        }
        CHECK(alpha_degree(t1 + t2, alpha) == alpha_degree(t1, alpha) + alpha_degree(t2, alpha));
    }
}

TEST_CASE("slope shift law on random triples") {
    std::mt19937_64 rng(11);
    auto r = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    int checked = 0;
    for (int it = 0; it < 1000; ++it) {
        std::size_t n = 1 + rng() % 3;
        TypeVector t;
        StabilityParameter alpha, shifted;
        Rat c = make_rat(r(-20, 20), r(1, 7));
        for (std::size_t i = 0; i < n; ++i) {
            t.entries.push_back({r(0, 3), r(-4, 4)});
            alpha.weights.push_back(make_rat(r(-9, 9), r(1, 5)));
            shifted.weights.push_back(alpha.weights.back() + c);
        }
        if (t.total_rank() == 0) continue;
        CHECK(alpha_slope(t, shifted) == alpha_slope(t, alpha) + c);
        ++checked;
    }
    CHECK(checked > 800);
}

TEST_CASE("slope comparisons are shift invariant") {
    std::mt19937_64 rng(13);
    auto r = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 1 + rng() % 3;
        TypeVector t1, t2;
        StabilityParameter alpha, shifted;
        Rat c = make_rat(r(-20, 20), r(1, 7));
        for (std::size_t i = 0; i < n; ++i) {
            t1.entries.push_back({r(0, 3), r(-4, 4)});
            t2.entries.push_back({r(0, 3), r(-4, 4)});
            alpha.weights.push_back(make_rat(r(-9, 9), r(1, 5)));
            shifted.weights.push_back(alpha.weights.back() + c);
        }
        if (t1.total_rank() == 0 || t2.total_rank() == 0) continue;
        auto cmp = [](const Rat& a, const Rat& b) { return a < b ? -1 : a == b ? 0 : 1; };
        CHECK(cmp(alpha_slope(t1, alpha), alpha_slope(t2, alpha)) ==
              cmp(alpha_slope(t1, shifted), alpha_slope(t2, shifted)));
    }
}

TEST_CASE("enumerate subtypes") {
    SUBCASE("single vertex rank 1, window [0,0]") {
        auto out = enumerate_subtypes(tv({{1, 0}}), {{{0, 0}}});
        CHECK(out.empty());
    }
    SUBCASE("single vertex rank 2, window [-1,1]") {
        auto out = enumerate_subtypes(tv({{2, 0}}), {{{-1, 1}}});
        std::vector<TypeVector> want = {tv({{1, -1}}), tv({{1, 0}}), tv({{1, 1}}),
                                        tv({{2, -1}}), tv({{2, 1}})};
        CHECK(out == want);
    }
    SUBCASE("A2 ranks (1,1), window [0,0]") {
        auto out = enumerate_subtypes(tv({{1, 0}, {1, 0}}), {{{0, 0}, {0, 0}}});
        std::vector<TypeVector> want = {tv({{0, 0}, {1, 0}}), tv({{1, 0}, {0, 0}})};
        CHECK(out == want);
    }
    SUBCASE("empty window gives empty list") {
        auto out = enumerate_subtypes(tv({{2, 0}, {1, 1}}), {{{1, 0}, {1, 0}}});
        CHECK(out.empty());
    }
    SUBCASE("output is sorted, duplicate free, excludes 0 and t") {
        TypeVector t = tv({{2, 1}, {1, -1}});
        auto out = enumerate_subtypes(t, {{{-2, 2}, {-2, 2}}});
        CHECK(std::is_sorted(out.begin(), out.end()));
        CHECK(std::adjacent_find(out.begin(), out.end()) == out.end());
        for (const auto& s : out) {
            CHECK_FALSE(s.is_zero());
            CHECK(s != t);
            for (std::size_t i = 0; i < s.entries.size(); ++i) {
                CHECK(s.entries[i].rank >= 0);
                CHECK(s.entries[i].rank <= t.entries[i].rank);
                if (s.entries[i].rank == 0) CHECK(s.entries[i].degree == 0);
            }
        }
    }
}

TEST_CASE("genus context rejects negative genus") {
    CHECK_THROWS_AS(GenusContext(-1), std::invalid_argument);
    CHECK(GenusContext(2).genus == 2);
}
