#include <doctest.h>

#include "chasles/chasles_core.hpp"
#include "chasles/classifier.hpp"

#include <algorithm>
#include <random>

using namespace chasles;

namespace {

LatticeConfiguration cubic_triangle() {
    std::vector<LVec> pts;
    for (long long i = 0; i <= 3; ++i)
        for (long long j = 0; i + j <= 3; ++j) pts.push_back({i, j});
    return LatticeConfiguration(2, pts);
}

LatticeConfiguration interior_triangle() {
    return LatticeConfiguration(2, {{0, 0}, {1, 1}, {2, 1}, {1, 2}});
}

LatticeConfiguration octad() {
    return LatticeConfiguration(3, {{0, 0, 0},
                                    {1, 0, 0},
                                    {0, 1, 0},
                                    {0, 0, 1},
                                    {2, 0, 0},
                                    {0, 2, 0},
                                    {0, 0, 2},
                                    {1, 1, 0},
                                    {1, 0, 1},
                                    {0, 1, 1}});
}

}  // namespace

TEST_CASE("chasles configuration predicate") {
    ConfigurationReport cubic = is_chasles_configuration(cubic_triangle());
    CHECK(cubic.chasles);
    CHECK(cubic.N == 8);
    CHECK(cubic.saturated);

    ConfigurationReport oct = is_chasles_configuration(octad());
    CHECK(oct.chasles);
    CHECK(oct.N == 7);
    CHECK(oct.saturated);

    LatticeConfiguration t67(2, {{0, 0}, {1, 2}, {3, 1}, {1, 1}, {2, 1}});
    ConfigurationReport no = is_chasles_configuration(t67);
    CHECK_FALSE(no.chasles);
    CHECK(no.vol == 5);

    CHECK_THROWS_AS(is_chasles_configuration(LatticeConfiguration(2, {{0, 0}, {1, 0}})), Error);
}

TEST_CASE("chasles structure predicate") {
    for (int n = 1; n <= 5; ++n) {
        ChaslesStructure s = family_pq(n);
        StructureReport rep = is_chasles_structure(s.configurations, s.partition);
        CHECK(rep.chasles);
        CHECK(rep.N == 2 * n + 1);
        CHECK(rep.mixed_vol == 2 * n + 2);
    }

    StructureReport single = is_chasles_structure({interior_triangle()}, {2});
    CHECK(single.chasles);
    CHECK(single.N == 2);

    // two unit segments: N = 1 but mixed volume 1 != 2
    LatticeConfiguration ex(2, {{0, 0}, {1, 0}});
    LatticeConfiguration ey(2, {{0, 0}, {0, 1}});
    StructureReport segs = is_chasles_structure({ex, ey}, {1, 1});
    CHECK_FALSE(segs.chasles);
    CHECK(segs.mixed_vol == 1);
}

TEST_CASE("quadrangle family construction") {
    ChaslesStructure s1 = family_pq(1);
    CHECK(s1.N == 3);
    CHECK(s1.configurations[0].size() == 4);
    CHECK(s1.configurations[1].size() == 4);

    ChaslesStructure s3 = family_pq(3);
    LatticePolytope sum = minkowski_sum(convex_hull(s3.configurations[0]),
                                        convex_hull(s3.configurations[1]));
    CHECK(normalized_volume(LatticeConfiguration(2, sum.vertices)) == 28);

    // P_n and Q_n are unimodular images of each other
    auto [eq, witness] = equivalent(s1.configurations[0], s1.configurations[1]);
    CHECK(eq);
    REQUIRE(witness.has_value());
    CHECK(apply_unimodular(s1.configurations[0], *witness) == s1.configurations[1]);
}

TEST_CASE("extra point of the worked example") {
    ChaslesStructure s = ChaslesStructure::create({interior_triangle()}, {2});
    std::vector<RationalPoint> pts = {RationalPoint({Rat(1), Rat(2)}),
                                      RationalPoint({Rat(3), Rat(1)})};
    ExtraPointResult res = extra_point(s, pts);
    CHECK(res.point.coords[0] == Rat(8));
    CHECK(res.point.coords[1] == Rat(-3, 2));
    CHECK(res.distinct_from_inputs);
    for (const Rat& c : res.certificates) CHECK(c == 0);
    REQUIRE(res.sign_pattern.size() == 2);

    // collinear with the two inputs
    Rat det = (Rat(3) - 1) * (res.point.coords[1] - 2) - (res.point.coords[0] - 1) * (Rat(1) - 2);
    CHECK(det == 0);

    ExtraPointResult via = extra_point_via_eliminant(s, pts);
    CHECK(via.point.coords == res.point.coords);
}

TEST_CASE("path equivalence and permutation invariance on random inputs") {
    ChaslesStructure s = ChaslesStructure::create({interior_triangle()}, {2});
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 10) {
        std::vector<RationalPoint> pts = {
            RationalPoint({random_rational(rng, 15, 4), random_rational(rng, 15, 4)}),
            RationalPoint({random_rational(rng, 15, 4), random_rational(rng, 15, 4)})};
        ExtraPointResult a, b;
        try {
            a = extra_point(s, pts);
            b = extra_point_via_eliminant(s, pts);
        } catch (const Error&) {
            continue;
        }
        CHECK(a.point.coords == b.point.coords);

        std::vector<RationalPoint> swapped = {pts[1], pts[0]};
        ExtraPointResult c = extra_point(s, swapped);
        CHECK(c.point.coords == a.point.coords);
        ++done;
    }
}

TEST_CASE("scaling equivariance of the worked example") {
    ChaslesStructure s = ChaslesStructure::create({interior_triangle()}, {2});
    Rat lambda(3), mu(-2, 3);
    std::vector<RationalPoint> base = {RationalPoint({Rat(1), Rat(2)}),
                                       RationalPoint({Rat(3), Rat(1)})};
    std::vector<RationalPoint> scaled = {
        RationalPoint({lambda * 1, mu * 2}),
        RationalPoint({lambda * 3, mu * 1})};
    ExtraPointResult a = extra_point(s, base);
    ExtraPointResult b = extra_point(s, scaled);
    CHECK(b.point.coords[0] == lambda * a.point.coords[0]);
    CHECK(b.point.coords[1] == mu * a.point.coords[1]);
}

TEST_CASE("classical ninth point with exact certificates") {
    ChaslesStructure s = ChaslesStructure::create({cubic_triangle()}, {2});
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 3) {
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 8; ++i)
            pts.push_back(RationalPoint({random_rational(rng, 9, 3), random_rational(rng, 9, 3)}));
        ExtraPointResult res;
        try {
            res = extra_point(s, pts);
        } catch (const Error&) {
            continue;
        }
        CHECK(res.distinct_from_inputs);
        for (const Rat& c : res.certificates) CHECK(c == 0);

        ExtraPointResult via = extra_point_via_eliminant(s, pts);
        CHECK(via.point.coords == res.point.coords);
        ++done;
    }
}

TEST_CASE("degenerate input is loud") {
    ChaslesStructure s = ChaslesStructure::create({interior_triangle()}, {2});
    std::vector<RationalPoint> dup = {RationalPoint({Rat(2), Rat(3)}),
                                      RationalPoint({Rat(2), Rat(3)})};
    CHECK_THROWS_AS(extra_point(s, dup), Error);

    std::vector<RationalPoint> one = {RationalPoint({Rat(2), Rat(3)})};
    CHECK_THROWS_AS(extra_point(s, one), Error);
}

TEST_CASE("extra point in three dimensions via the eliminant path") {
    // prism configuration: N = 3
    LatticeConfiguration a3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {0, 0, 2}});
    ChaslesStructure s = ChaslesStructure::create({a3}, {3});
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 2) {
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 3; ++i)
            pts.push_back(RationalPoint({random_rational(rng, 5, 2), random_rational(rng, 5, 2),
                                         random_rational(rng, 5, 2)}));
        ExtraPointResult res;
        try {
            res = extra_point_via_eliminant(s, pts);
        } catch (const Error&) {
            continue;
        }
        CHECK(res.distinct_from_inputs);
        for (const Rat& c : res.certificates) CHECK(c == 0);
        ++done;
    }
}

TEST_CASE("octad eighth point via the eliminant path") {
    ChaslesStructure s = ChaslesStructure::create({octad()}, {3});
    std::mt19937_64 rng(41);
    int done = 0, attempts = 0;
    while (done < 1 && attempts < 10) {
        ++attempts;
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 7; ++i)
            pts.push_back(RationalPoint({random_rational(rng, 4, 2), random_rational(rng, 4, 2),
                                         random_rational(rng, 4, 2)}));
        ExtraPointResult res;
        try {
            res = extra_point_via_eliminant(s, pts);
        } catch (const Error&) {
            continue;
        }
        CHECK(res.distinct_from_inputs);
        for (const Rat& c : res.certificates) CHECK(c == 0);
        ++done;
    }
    CHECK(done == 1);
}
