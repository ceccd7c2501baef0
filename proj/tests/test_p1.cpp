#include <doctest.h>

#include "qb/euler.hpp"
#include "qb/p1.hpp"

using namespace qb;

namespace {

Quiver a2() {
    return {{"v1", "v2"}, {{"a", "v1", "v2"}}};
}

Poly c(std::vector<long> coeffs) {
    Poly p;
    for (long v : coeffs) p.push_back(Rat(v));
    return p;
}

// A2 instance with E_v1 = O(d1), E_v2 = O(d2) and the given 1x1 arrow map.
QuiverBundleP1 chain(long long d1, long long d2, Poly phi) {
    QuiverBundleP1 E;
    E.quiver = a2();
    E.bundles = {SplitBundle({d1}), SplitBundle({d2})};
    PolyMatrix m(1, 1);
    m.at(0, 0) = std::move(phi);
    E.maps = {std::move(m)};
    E.validate();
    return E;
}

}  // namespace

TEST_CASE("line bundle hom and ext dimensions") {
    CHECK(hom_dim(0, 0) == 1);
    CHECK(hom_dim(0, 3) == 4);
    CHECK(hom_dim(3, 0) == 0);
    CHECK(ext1_dim(0, 0) == 0);
    CHECK(ext1_dim(3, 0) == 2);
    CHECK(ext1_dim(0, 5) == 0);
}

TEST_CASE("split bundle stores degrees descending") {
    SplitBundle b({-1, 3, 0});
    CHECK(b.degrees == std::vector<long long>{3, 0, -1});
    CHECK(b.rank() == 3);
    CHECK(b.degree() == 2);
}

TEST_CASE("bundle validation rejects wrong homogeneity") {
    QuiverBundleP1 E = chain(0, 1, c({1, 0}));
    CHECK_NOTHROW(E.validate());
    E.maps[0].at(0, 0) = c({1});  // degree 0 entry where degree 1 is required
    CHECK_THROWS(E.validate());
}

TEST_CASE("build_d0") {
    SUBCASE("A2 (O, O(1)) with phi = x0") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        RatMatrix d0 = build_d0(E, E);
        CHECK(d0.rows() == 2);
        CHECK(d0.cols() == 2);
        CHECK(rank(d0) == 1);
        CHECK(nullspace(d0).size() == 1);
    }
    SUBCASE("zero maps give the zero matrix") {
        QuiverBundleP1 E = chain(0, 1, {});
        RatMatrix d0 = build_d0(E, E);
        CHECK(rank(d0) == 0);
        CHECK(nullspace(d0).size() == 2);  // sum of hom dims
    }
    SUBCASE("no arrows degenerates the complex") {
        QuiverBundleP1 E;
        E.quiver = {{"v1"}, {}};
        E.bundles = {SplitBundle({2, 0})};
        RatMatrix d0 = build_d0(E, E);
        CHECK(d0.rows() == 0);
        CHECK(d0.cols() == hom_dim(2, 2) + hom_dim(2, 0) + hom_dim(0, 2) + hom_dim(0, 0));
    }
}

TEST_CASE("build_d1") {
    SUBCASE("A2 (O(3), O) with phi = 0") {
        QuiverBundleP1 E = chain(3, 0, {});
        RatMatrix d1 = build_d1(E, E);
        CHECK(d1.cols() == 0);                   // h1 of End summands all vanish
        CHECK(d1.rows() == 2);                   // ext1_dim(3, 0) = 2
        CHECK(rank(d1) == 0);
    }
    SUBCASE("A2 (O, O(1)) has trivial H1 spaces") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        RatMatrix d1 = build_d1(E, E);
        CHECK(d1.rows() == 0);
        CHECK(d1.cols() == 0);
    }
}

TEST_CASE("hypercohomology profiles") {
    SUBCASE("A2 (O, O(1)), phi = x0 -> (1,1,0)") {
        HypercohProfile p = hypercoh_profile(chain(0, 1, c({1, 0})), chain(0, 1, c({1, 0})));
        CHECK(p.H0 == 1);
        CHECK(p.H1 == 1);
        CHECK(p.H2 == 0);
        CHECK(p.chi == 0);
    }
    SUBCASE("A2 (O(3), O), phi = 0 -> (2,0,2)") {
        HypercohProfile p = hypercoh_profile(chain(3, 0, {}), chain(3, 0, {}));
        CHECK(p.H0 == 2);
        CHECK(p.H1 == 0);
        CHECK(p.H2 == 2);
        CHECK(p.chi == 4);
    }
    SUBCASE("A2 (O, O(1)), phi = 0 -> (2,2,0)") {
        HypercohProfile p = hypercoh_profile(chain(0, 1, {}), chain(0, 1, {}));
        CHECK(p.H0 == 2);
        CHECK(p.H1 == 2);
        CHECK(p.H2 == 0);
        CHECK(p.chi == 0);
    }
    SUBCASE("chi matches the closed form and the alternating sum holds") {
        for (std::uint64_t seed = 500; seed < 520; ++seed) {
            auto [E, Ep] = random_instance(seed, {});
            HypercohProfile p = hypercoh_profile(E, Ep);
            CHECK(p.chi ==
                  euler_form(E.quiver, E.type(), Ep.type(), GenusContext(0)).chi);
            CHECK(p.H0 - p.h0F0 + p.h0F1 - p.H1 + p.h1F0 - p.h1F1 + p.H2 == 0);
        }
    }
}

TEST_CASE("hom intertwiners") {
    SUBCASE("A2 (O, O(1)), phi = x0 has a 1-dimensional Hom") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        HomSpace h = hom_intertwiners(E, E);
        CHECK(h.dimension == 1);
        REQUIRE(h.basis.size() == 1);
    }
    SUBCASE("connected rank-one with nonzero maps is simple") {
        Quiver q{{"v1", "v2", "v3"}, {{"a", "v1", "v2"}, {"b", "v2", "v3"}}};
        QuiverBundleP1 E;
        E.quiver = q;
        E.bundles = {SplitBundle({0}), SplitBundle({1}), SplitBundle({3})};
        PolyMatrix m1(1, 1), m2(1, 1);
        m1.at(0, 0) = c({1, 0});
        m2.at(0, 0) = c({1, 1, -2});
        E.maps = {m1, m2};
        E.validate();
        CHECK(hom_intertwiners(E, E).dimension == 1);
    }
    SUBCASE("all-negative twists give zero") {
        QuiverBundleP1 E = chain(3, 4, c({2, 0}));
        QuiverBundleP1 Ep = chain(0, 1, c({1, 0}));
        CHECK(hom_intertwiners(E, Ep).dimension == 0);
    }
    SUBCASE("agrees with H0 on random instances") {
        for (std::uint64_t seed = 700; seed < 715; ++seed) {
            auto [E, Ep] = random_instance(seed, {});
            CHECK(hom_intertwiners(E, Ep).dimension == hypercoh_profile(E, Ep).H0);
        }
    }
}

TEST_CASE("serre duality per arrow") {
    SUBCASE("A2 (O(3), O), phi = 0 -> (2, 2)") {
        QuiverBundleP1 E = chain(3, 0, {});
        auto [ker, coker] = serre_dual_Pa(E, E, 0);
        CHECK(ker == 2);
        CHECK(coker == 2);
    }
    SUBCASE("A2 (O, O(1)), phi = x0 -> (0, 0)") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        auto [ker, coker] = serre_dual_Pa(E, E, 0);
        CHECK(ker == 0);
        CHECK(coker == 0);
    }
    SUBCASE("equal coordinates on random instances") {
        for (std::uint64_t seed = 800; seed < 815; ++seed) {
            auto [E, Ep] = random_instance(seed, {});
            for (std::size_t a = 0; a < E.quiver.num_arrows(); ++a) {
                auto [ker, coker] = serre_dual_Pa(E, Ep, a);
                CHECK(ker == coker);
            }
        }
    }
}

TEST_CASE("rank one stability") {
    QuiverBundleP1 E = chain(0, 1, c({1, 0}));
    SUBCASE("alpha = (3,0) is stable") {
        RankOneResult r = rank_one_stability(E, {{Rat(3), Rat(0)}});
        CHECK(r.verdict == Verdict::Stable);
    }
    SUBCASE("alpha = (1,0) is strictly semistable with witness {v2}") {
        RankOneResult r = rank_one_stability(E, {{Rat(1), Rat(0)}});
        CHECK(r.verdict == Verdict::StrictlySemistable);
        CHECK(r.witness == std::vector<std::size_t>{1});
    }
    SUBCASE("alpha = (-3,0) is unstable") {
        RankOneResult r = rank_one_stability(E, {{Rat(-3), Rat(0)}});
        CHECK(r.verdict == Verdict::Unstable);
        REQUIRE(r.witness_slope.has_value());
        CHECK(*r.witness_slope > alpha_slope(E.type(), {{Rat(-3), Rat(0)}}));
    }
    SUBCASE("single vertex rank one is always stable") {
        QuiverBundleP1 S;
        S.quiver = {{"v1"}, {}};
        S.bundles = {SplitBundle({2})};
        CHECK(rank_one_stability(S, {{Rat(-7, 3)}}).verdict == Verdict::Stable);
    }
    SUBCASE("verdict is shift invariant") {
        for (long shift : {-5L, -1L, 2L, 9L}) {
            StabilityParameter base{{Rat(1), Rat(0)}};
            StabilityParameter moved{{Rat(1) + Rat(shift), Rat(0) + Rat(shift)}};
            CHECK(rank_one_stability(E, base).verdict == rank_one_stability(E, moved).verdict);
        }
    }
    SUBCASE("higher rank is rejected") {
        QuiverBundleP1 B;
        B.quiver = {{"v1"}, {}};
        B.bundles = {SplitBundle({0, 0})};
        CHECK_THROWS(rank_one_stability(B, {{Rat(0)}}));
    }
}

TEST_CASE("split destabilizer search") {
    SUBCASE("block-zero arrow map yields a destabilizer") {
        QuiverBundleP1 E;
        E.quiver = a2();
        E.bundles = {SplitBundle({1, 0}), SplitBundle({1})};
        PolyMatrix m(1, 2);
        m.at(0, 0) = c({1});  // O(1) summand maps identically
        m.at(0, 1) = {};      // O summand is killed
        E.maps = {std::move(m)};
        E.validate();
        auto d = split_destabilizer_search(E, {{Rat(0), Rat(0)}});
        REQUIRE(d.has_value());
        CHECK(d->slope > d->ambient_slope);
    }
    SUBCASE("no zero blocks, no split destabilizer") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        StabilityParameter alpha{{Rat(3), Rat(0)}};
        CHECK_FALSE(split_destabilizer_search(E, alpha).has_value());
    }
    SUBCASE("agrees with rank-one unstable verdicts") {
        QuiverBundleP1 E = chain(0, 1, c({1, 0}));
        StabilityParameter alpha{{Rat(-3), Rat(0)}};
        CHECK(rank_one_stability(E, alpha).verdict == Verdict::Unstable);
        auto d = split_destabilizer_search(E, alpha);
        REQUIRE(d.has_value());
        CHECK(d->slope > d->ambient_slope);
    }
}

TEST_CASE("generic injectivity and surjectivity certificates") {
    QuiverBundleP1 E = chain(0, 1, c({1, 0}));
    CHECK(generically_injective(E.maps[0]));
    CHECK(generically_surjective(E.maps[0]));

    PolyMatrix wide(1, 2);
    wide.at(0, 0) = c({1});
    wide.at(0, 1) = c({1});
    CHECK_FALSE(generically_injective(wide));
    CHECK(generically_surjective(wide));

    PolyMatrix tall(2, 1);
    tall.at(0, 0) = c({1});
    tall.at(1, 0) = c({2});
    CHECK(generically_injective(tall));
    CHECK_FALSE(generically_surjective(tall));

    PolyMatrix zero(2, 2);
    CHECK_FALSE(generically_injective(zero));
    CHECK_FALSE(generically_surjective(zero));
}

TEST_CASE("random instances") {
    SUBCASE("deterministic in the seed") {
        auto [E1, E1p] = random_instance(42, {});
        auto [E2, E2p] = random_instance(42, {});
        CHECK(E1.type() == E2.type());
        CHECK(E1p.type() == E2p.type());
        CHECK(E1.quiver.vertices == E2.quiver.vertices);
        CHECK(E1.quiver.num_arrows() == E2.quiver.num_arrows());
        for (std::size_t a = 0; a < E1.maps.size(); ++a)
            CHECK(E1.maps[a].entries == E2.maps[a].entries);
    }
    SUBCASE("constraint produces certified maps") {
        auto [E, Ep] = random_instance(5, {}, MapConstraint::Injective);
        for (const auto& m : E.maps) CHECK(generically_injective(m));
        for (const auto& m : Ep.maps) CHECK(generically_injective(m));
        auto [F, Fp] = random_instance(6, {}, MapConstraint::GenericallySurjective);
        for (const auto& m : F.maps) CHECK(generically_surjective(m));
        for (const auto& m : Fp.maps) CHECK(generically_surjective(m));
    }
    SUBCASE("instances satisfy the structural invariants") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto [E, Ep] = random_instance(seed, {});
            CHECK(validate_quiver(E.quiver).ok);
            CHECK_NOTHROW(E.validate());
            CHECK_NOTHROW(Ep.validate());
        }
    }
    SUBCASE("bad limits are rejected") {
        CHECK_THROWS(random_instance(0, {0, 3, 4}));
    }
}
