#include <doctest.h>

#include "chasles/lattice_geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

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

LatticeConfiguration a3_config() {
    return LatticeConfiguration(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {0, 0, 2}});
}

LatticeConfiguration quadrangle_p(int n) {
    std::vector<LVec> verts = {{0, 0}, {0, n}, {1, n + 1}, {1, 1}};
    return lattice_points(convex_hull(LatticeConfiguration(2, verts)));
}

LatticeConfiguration quadrangle_q(int n) {
    std::vector<LVec> verts = {{1, 0}, {0, 1}, {0, n + 1}, {1, n}};
    return lattice_points(convex_hull(LatticeConfiguration(2, verts)));
}

// Independent facet oracle: hyperplanes through d affinely independent points
// with all points on one side.
std::set<std::pair<LVec, long long>> brute_force_facets(const LatticeConfiguration& a) {
    const int d = a.d;
    const int n = static_cast<int>(a.size());
    std::set<std::pair<LVec, long long>> out;
    std::vector<int> idx(d);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == d) {
            Matrix<Int> rows;
            for (int i = 1; i < d; ++i) {
                std::vector<Int> row(d);
                for (int j = 0; j < d; ++j) row[j] = a.points[idx[i]][j] - a.points[idx[0]][j];
                rows.push_back(row);
            }
            Matrix<Int> kern = integer_kernel(rows, d);
            if (kern.size() != 1) return;
            std::vector<Int> nv = primitive_vector(kern[0]);
            Int off(0);
            for (int j = 0; j < d; ++j) off += nv[j] * a.points[idx[0]][j];
            bool above = false, below = false;
            for (const LVec& p : a.points) {
                Int val(0);
                for (int j = 0; j < d; ++j) val += nv[j] * p[j];
                if (val > off) above = true;
                if (val < off) below = true;
            }
            if (above && below) return;
            LVec normal(d);
            if (below) {
                for (int j = 0; j < d; ++j) normal[j] = -nv[j].convert_to<long long>();
                out.insert({normal, -off.convert_to<long long>()});
            } else {
                for (int j = 0; j < d; ++j) normal[j] = nv[j].convert_to<long long>();
                out.insert({normal, off.convert_to<long long>()});
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("dimension") {
    CHECK(dimension(LatticeConfiguration(2, {{0, 0}})) == 0);
    CHECK(dimension(cubic_triangle()) == 2);
    CHECK(dimension(LatticeConfiguration(3, {{0, 0, 0}, {0, 1, 0}, {-1, 0, 2}})) == 2);
    CHECK(dimension(LatticeConfiguration(2, {{1, 1}, {3, 3}, {5, 5}})) == 1);
}

TEST_CASE("convex hull in the plane") {
    LatticeConfiguration square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    LatticePolytope hull = convex_hull(square);
    CHECK(hull.vertices.size() == 4);
    CHECK(hull.facets.size() == 4);
    CHECK_FALSE(hull.degenerate);

    LatticePolytope tri = convex_hull(interior_triangle());
    std::vector<LVec> expect = {{0, 0}, {1, 2}, {2, 1}};
    CHECK(tri.vertices == expect);
}

TEST_CASE("hull of a 3-D prism matches the brute-force oracle") {
    LatticeConfiguration a = a3_config();
    LatticePolytope hull = convex_hull(a);
    CHECK(hull.vertices.size() == 6);
    CHECK(hull.facets.size() == 5);

    std::set<std::pair<LVec, long long>> oracle = brute_force_facets(a);
    std::set<std::pair<LVec, long long>> got;
    for (const Facet& f : hull.facets) got.insert({f.normal, f.offset});
    CHECK(got == oracle);
}

TEST_CASE("degenerate hull is flagged") {
    LatticeConfiguration seg(2, {{0, 0}, {2, 0}});
    LatticePolytope hull = convex_hull(seg);
    CHECK(hull.degenerate);
    CHECK(hull.dim == 1);
    CHECK_THROWS_AS(facet_normals(hull), Error);
}

TEST_CASE("lattice point enumeration") {
    CHECK(lattice_points(convex_hull(cubic_triangle())).size() == 10);
    LatticeConfiguration single(2, {{0, 0}});
    CHECK(lattice_points(convex_hull(single)).points == single.points);
    CHECK(quadrangle_p(3).size() == 8);
    CHECK(quadrangle_q(3).size() == 8);
}

TEST_CASE("saturation") {
    CHECK(is_saturated(interior_triangle()));
    CHECK_FALSE(is_saturated(LatticeConfiguration(2, {{0, 0}, {2, 0}})));
    LatticeConfiguration t67(2, {{0, 0}, {1, 2}, {3, 1}, {1, 1}, {2, 1}});
    CHECK(is_saturated(t67));
    // full config of the cubic triangle is saturated; drop one interior point
    CHECK(is_saturated(cubic_triangle()));
    LatticeConfiguration missing(2, {{0, 0}, {3, 0}, {0, 3}});
    CHECK_FALSE(is_saturated(missing));
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(cubic_triangle()) == 9);
    CHECK(normalized_volume(interior_triangle()) == 3);
    CHECK(normalized_volume(LatticeConfiguration(2, {{0, 0}, {1, 0}})) == 0);  // degenerate
    for (int d = 3; d <= 6; ++d) {
        std::vector<LVec> pts;
        auto unit = [&](int i) {
            LVec e(d, 0);
            e[i] = 1;
            return e;
        };
        pts.push_back(LVec(d, 0));
        pts.push_back(unit(0));
        pts.push_back(unit(1));
        LVec e01 = unit(0);
        e01[1] = 1;
        pts.push_back(e01);
        pts.push_back(unit(2));
        LVec z2 = unit(2);
        z2[2] = 2;
        pts.push_back(z2);
        for (int i = 3; i < d; ++i) pts.push_back(unit(i));
        CHECK(normalized_volume(LatticeConfiguration(d, pts)) == 4);
    }
}

TEST_CASE("minkowski sum") {
    LatticePolytope p3 = convex_hull(quadrangle_p(3));
    LatticePolytope q3 = convex_hull(quadrangle_q(3));
    LatticePolytope sum = minkowski_sum(p3, q3);
    std::vector<LVec> expect = {{0, 1}, {0, 7}, {1, 0}, {1, 8}, {2, 1}, {2, 7}};
    CHECK(sum.vertices == expect);
    CHECK(facet_normals(sum).size() == 6);

    LatticePolytope origin = convex_hull(LatticeConfiguration(2, {{0, 0}}));
    LatticePolytope same = minkowski_sum(p3, origin);
    CHECK(same.vertices == p3.vertices);

    LatticePolytope ex = convex_hull(LatticeConfiguration(2, {{0, 0}, {1, 0}}));
    LatticePolytope ey = convex_hull(LatticeConfiguration(2, {{0, 0}, {0, 1}}));
    LatticePolytope unit_square = minkowski_sum(ex, ey);
    CHECK(unit_square.vertices.size() == 4);
    CHECK_FALSE(unit_square.degenerate);
}

TEST_CASE("mixed volume") {
    LatticeConfiguration p = interior_triangle();
    CHECK(mixed_volume({{p, 2}}) == normalized_volume(p));

    LatticeConfiguration ex(2, {{0, 0}, {1, 0}});
    LatticeConfiguration ey(2, {{0, 0}, {0, 1}});
    CHECK(mixed_volume({{ex, 1}, {ey, 1}}) == 1);

    for (int n : {1, 2, 3, 5, 8}) {
        CHECK(mixed_volume({{quadrangle_p(n), 1}, {quadrangle_q(n), 1}}) == 2 * n + 2);
    }

    // symmetry
    CHECK(mixed_volume({{quadrangle_p(2), 1}, {quadrangle_q(2), 1}}) ==
          mixed_volume({{quadrangle_q(2), 1}, {quadrangle_p(2), 1}}));

    CHECK_THROWS_AS(mixed_volume({{p, 1}}), Error);
}

TEST_CASE("pick counts") {
    PickCounts a = pick_counts(cubic_triangle());
    CHECK(a.interior == 1);
    CHECK(a.boundary == 9);
    CHECK(2 * a.interior + a.boundary - 2 == normalized_volume(cubic_triangle()));

    PickCounts b = pick_counts(interior_triangle());
    CHECK(b.interior == 1);
    CHECK(b.boundary == 3);

    PickCounts c = pick_counts(quadrangle_p(3));
    CHECK(c.interior == 0);
    CHECK(c.boundary == 8);
    CHECK(2 * c.interior + c.boundary - 2 == normalized_volume(quadrangle_p(3)));
}

TEST_CASE("facet normals of the unit square") {
    LatticeConfiguration square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    std::vector<LVec> normals = facet_normals(convex_hull(square));
    std::vector<LVec> expect = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    CHECK(normals == expect);

    std::vector<LVec> tri_normals =
        facet_normals(convex_hull(LatticeConfiguration(2, {{0, 0}, {2, 1}, {1, 2}})));
    CHECK(tri_normals.size() == 3);
    for (const LVec& n : tri_normals) {
        long long g = std::gcd(std::abs(n[0]), std::abs(n[1]));
        CHECK(g == 1);
    }
}

TEST_CASE("unimodular maps") {
    LatticeConfiguration a = interior_triangle();
    UnimodularMap identity({{1, 0}, {0, 1}}, {0, 0});
    CHECK(apply_unimodular(a, identity) == a);

    UnimodularMap shear({{1, 1}, {0, 1}}, {0, 0});
    CHECK(normalized_volume(apply_unimodular(a, shear)) == 3);

    UnimodularMap translate({{1, 0}, {0, 1}}, {5, 7});
    LatticeConfiguration moved = apply_unimodular(a, translate);
    CHECK(normalized_volume(moved) == 3);
    CHECK(is_saturated(moved));

    CHECK_THROWS_AS(UnimodularMap({{2, 0}, {0, 1}}, {0, 0}), Error);

    UnimodularMap composed = shear.compose(translate);
    UnimodularMap inv = composed.inverse();
    LVec p = {3, -4};
    CHECK(inv.apply(composed.apply(p)) == p);
}

TEST_CASE("pick identity and invariance on random polygons") {
    std::mt19937_64 rng(8675309);
    int checked = 0;
    while (checked < 60) {
        int count = static_cast<int>(uniform_ll(rng, 3, 9));
        std::vector<LVec> pts;
        for (int i = 0; i < count; ++i)
            pts.push_back({uniform_ll(rng, -5, 5), uniform_ll(rng, -5, 5)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) continue;
        LatticeConfiguration a(2, pts);
        if (dimension(a) != 2) continue;

        PickCounts pc = pick_counts(a);
        CHECK(normalized_volume(a) == 2 * pc.interior + pc.boundary - 2);

        UnimodularMap t = random_unimodular(rng, 2, 5, 6);
        LatticeConfiguration b = apply_unimodular(a, t);
        CHECK(normalized_volume(a) == normalized_volume(b));
        CHECK(is_saturated(a) == is_saturated(b));
        PickCounts pcb = pick_counts(b);
        CHECK(pc.interior == pcb.interior);
        CHECK(pc.boundary == pcb.boundary);
        ++checked;
    }
}

TEST_CASE("lattice points contain the configuration") {
    std::mt19937_64 rng(24601);
    for (int trial = 0; trial < 40; ++trial) {
        int count = static_cast<int>(uniform_ll(rng, 1, 7));
        std::vector<LVec> pts;
        for (int i = 0; i < count; ++i)
            pts.push_back({uniform_ll(rng, -4, 4), uniform_ll(rng, -4, 4)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        LatticeConfiguration a(2, pts);
        LatticeConfiguration cover = lattice_points(convex_hull(a));
        for (const LVec& p : a.points) {
            CHECK(std::binary_search(cover.points.begin(), cover.points.end(), p));
        }
    }
}

TEST_CASE("minkowski commutativity and associativity") {
    LatticePolytope a = convex_hull(interior_triangle());
    LatticePolytope b = convex_hull(quadrangle_p(2));
    LatticePolytope c = convex_hull(LatticeConfiguration(2, {{0, 0}, {1, 0}, {0, 1}}));
    CHECK(minkowski_sum(a, b).vertices == minkowski_sum(b, a).vertices);
    CHECK(minkowski_sum(minkowski_sum(a, b), c).vertices ==
          minkowski_sum(a, minkowski_sum(b, c)).vertices);
}
