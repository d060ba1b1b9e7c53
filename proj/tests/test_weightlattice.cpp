#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oforge/rng.hpp"
#include "oforge/weightlattice.hpp"

using namespace oforge;

namespace {
Weight W(std::initializer_list<long long> xs) { return Weight(std::vector<long long>(xs)); }
RatVec rv(std::initializer_list<long long> xs) {
    RatVec v;
    for (long long x : xs) v.push_back(Rational(x));
    return v;
}
}  // namespace

TEST_CASE("dominance order") {
    CHECK(dominance_leq(W({1, 1}), W({2, 0})));
    CHECK(!dominance_leq(W({2, 0}), W({1, 1})));
    // (1,0,0) - (0,0,1) is the sum of both simple roots, so these compare
    // one way only
    CHECK(!dominance_leq(W({1, 0, 0}), W({0, 0, 1})));
    CHECK(dominance_leq(W({0, 0, 1}), W({1, 0, 0})));
    // equal sums, partial sums fail in both directions
    CHECK(!dominance_leq(W({2, -1, -1}), W({1, 1, -2})));
    CHECK(!dominance_leq(W({1, 1, -2}), W({2, -1, -1})));
    CHECK(dominance_leq(W({1, 1, 0}), W({2, 0, 0})));
    CHECK_THROWS_AS(dominance_leq(W({1}), W({1, 0})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order") {
    Rng rng(53);
    for (int t = 0; t < 200; ++t) {
        Weight a({rng.int_in(-3, 3), rng.int_in(-3, 3), rng.int_in(-3, 3)});
        Weight b({rng.int_in(-3, 3), rng.int_in(-3, 3), rng.int_in(-3, 3)});
        Weight c({rng.int_in(-3, 3), rng.int_in(-3, 3), rng.int_in(-3, 3)});
        CHECK(dominance_leq(a, a));
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
    }
}

TEST_CASE("cone membership") {
    RationalCone c = RationalCone::from_weights({W({1, -1}), W({0, 1})}, 2);
    CHECK(cone_member(c, rv({1, 0})));   // (1,-1) + (0,1)
    CHECK(cone_member(c, rv({0, 0})));
    CHECK(cone_member(c, rv({3, 1})));
    CHECK(!cone_member(c, rv({-1, 0})));
    CHECK(!cone_member(c, rv({0, -1})));
    RationalCone zero;
    zero.dim = 2;
    CHECK(cone_member(zero, rv({0, 0})));
    CHECK(!cone_member(zero, rv({1, 0})));
}

TEST_CASE("dual cone") {
    // nonnegative orthant is self-dual
    RationalCone orthant = RationalCone::from_weights({W({1, 0}), W({0, 1})}, 2);
    RationalCone dual = dual_cone(orthant);
    for (const auto& g : dual.generators) CHECK(cone_member(orthant, g));
    for (const auto& g : orthant.generators) CHECK(cone_member(dual, g));

    // membership in the dual of cone{(1,-1),(0,1)}
    RationalCone c = RationalCone::from_weights({W({1, -1}), W({0, 1})}, 2);
    CHECK(in_dual(c, W({1, 1})));
    CHECK(in_dual(c, W({1, 0})));
    CHECK(!in_dual(c, W({0, -1})));
    RationalCone cd = dual_cone(c);
    CHECK(cone_member(cd, rv({1, 1})));
    CHECK(!cone_member(cd, rv({0, -1})));
}

TEST_CASE("dual is an involution") {
    std::vector<RationalCone> cones = {
        RationalCone::from_weights({W({1, 0}), W({0, 1})}, 2),
        RationalCone::from_weights({W({1, -1}), W({0, 1})}, 2),
        matrix_monoid_cone(2),
        matrix_monoid_cone(3),
        RationalCone::from_weights({W({2, 1, 0}), W({0, 1, 0}), W({0, 0, 1})}, 3),
    };
    for (const auto& c : cones) {
        RationalCone dd = dual_cone(dual_cone(c));
        for (const auto& g : dd.generators) CHECK(cone_member(c, g));
        for (const auto& g : c.generators) CHECK(cone_member(dd, g));
    }
}

TEST_CASE("strict convexity") {
    CHECK(!is_strictly_convex(RationalCone::from_weights({W({1, 0}), W({-1, 0})}, 2)));
    CHECK(is_strictly_convex(RationalCone::from_weights({W({1, 0}), W({0, 1})}, 2)));
    CHECK(is_strictly_convex(matrix_monoid_cone(2)));
    CHECK(!is_strictly_convex(RationalCone::from_weights({W({1, 1}), W({1, -1}), W({-1, 0})}, 2)));
}

TEST_CASE("polynomial dominant weights of the matrix monoid") {
    auto ws = polynomial_dominant_weights(matrix_monoid_cone(2), 2, Box{-3, 3});
    std::set<std::vector<long long>> got;
    for (const auto& w : ws) got.insert(w.c);
    std::set<std::vector<long long>> expect;
    for (long long i = 0; i <= 3; ++i)
        for (long long j = 0; j <= i; ++j) expect.insert({i, j});
    CHECK(got == expect);

    // trivial cone: every dominant weight in the box qualifies
    RationalCone trivial;
    trivial.dim = 2;
    auto all = polynomial_dominant_weights(trivial, 2, Box{-1, 1});
    CHECK(all.size() == 6);  // pairs with a >= b in {-1,0,1}^2

    // box excluding the origin
    auto shifted = polynomial_dominant_weights(matrix_monoid_cone(2), 2, Box{1, 3});
    for (const auto& w : shifted) CHECK(w.is_nonnegative());
    CHECK(shifted.size() == 6);  // (i,j), 1 <= j <= i <= 3

    // degenerate box
    auto origin = polynomial_dominant_weights(matrix_monoid_cone(2), 2, Box{0, 0});
    CHECK(origin.size() == 1);
    CHECK(origin[0] == W({0, 0}));
}

TEST_CASE("weight monoid is closed under addition inside the box") {
    auto ws = polynomial_dominant_weights(matrix_monoid_cone(2), 2, Box{-4, 4});
    std::set<std::vector<long long>> inS;
    for (const auto& w : ws) inS.insert(w.c);
    for (const auto& a : ws)
        for (const auto& b : ws) {
            Weight s = a + b;
            bool inside = true;
            for (long long v : s.c) inside = inside && v >= -4 && v <= 4;
            if (inside) CHECK(inS.count(s.c) == 1);
        }
}

TEST_CASE("saturation and ideal checks") {
    auto ws = polynomial_dominant_weights(matrix_monoid_cone(2), 2, Box{-4, 4});
    CHECK(saturation_check(ws, 2, Box{-4, 4}).ok);
    CHECK(ideal_check(ws, 2, Box{-4, 4}).ok);

    // (2,0) in S and (1,1) <= (2,0) and (1,1) in S: exercised above; negative control:
    std::vector<Weight> artificial = {W({2, 0})};
    auto rep = saturation_check(artificial, 2, Box{-2, 2});
    CHECK(!rep.ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].first == W({2, 0}));
    CHECK(rep.violations[0].second == W({1, 0}));
    auto irep = ideal_check(artificial, 2, Box{-2, 2});
    CHECK(!irep.ok);  // (1,1) <= (2,0) is missing
}

TEST_CASE("coefficient family") {
    RationalCone cone = matrix_monoid_cone(2);
    auto ws = polynomial_dominant_weights(cone, 2, Box{-3, 3});
    auto fam = omega_coefficient_family(det_weight(2), ws, cone);
    CHECK(fam.is_free(W({1, 1})));
    CHECK(!fam.is_free(W({1, 0})));
    CHECK(fam.is_free(W({2, 1})));
    CHECK(!fam.is_free(W({2, 0})));
    CHECK(fam.is_free(W({3, 3})));
    CHECK(fam.proper_in_truncation);
    CHECK_THROWS_AS(omega_coefficient_family(W({5, 5}), ws, cone), std::invalid_argument);
}

TEST_CASE("monoid cone from a character") {
    auto res = monoid_cone_from_character(2, det_weight(2));
    CHECK(res.identity_ok);
    CHECK(res.strictly_convex);
    // its dual must contain det but not the non-polynomial direction
    CHECK(in_dual(res.cone, det_weight(2)));

    auto zero = monoid_cone_from_character(2, W({0, 0}));
    CHECK(zero.identity_ok);
    CHECK(!zero.strictly_convex);

    auto res3 = monoid_cone_from_character(3, det_weight(3));
    CHECK(res3.identity_ok);
    CHECK(res3.strictly_convex);

    auto bad = monoid_cone_from_character(2, W({1, 0}));
    CHECK(!bad.message.empty());
}
