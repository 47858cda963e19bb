#include <doctest.h>

#include "chasles/resultants.hpp"
#include "chasles/solver_numeric.hpp"

#include <random>

using namespace chasles;

namespace {

PolyQ poly(std::vector<long long> ascending) {
    std::vector<Rat> c;
    for (long long v : ascending) c.emplace_back(v);
    return PolyQ(std::move(c));
}

LaurentPolynomial from_terms(int d, std::vector<std::pair<Expo, Rat>> terms) {
    LaurentPolynomial f(d);
    for (auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

// Basis of the triangle-with-interior-point example, as rational functions of
// two parameter points (a1,b1), (a2,b2).
std::pair<LaurentPolynomial, LaurentPolynomial> interior_triangle_basis(const Rat& a1, const Rat& b1,
                                                                        const Rat& a2, const Rat& b2) {
    LaurentPolynomial f = from_terms(2, {{{0, 0}, a1 * a2 * b1 * b2 * (a1 * b2 - a2 * b1)},
                                         {{2, 1}, a1 * b1 * b1 - a2 * b2 * b2},
                                         {{1, 2}, a2 * a2 * b2 - a1 * a1 * b1}});
    LaurentPolynomial g = from_terms(2, {{{2, 1}, b1 - b2},
                                         {{1, 2}, a2 - a1},
                                         {{1, 1}, a1 * b2 - a2 * b1}});
    return {f, g};
}

}  // namespace

TEST_CASE("sylvester resultant on small cases") {
    CHECK(sylvester_resultant<Rat>(poly({-1, 1}), poly({-2, 1})) == -1);
    CHECK(sylvester_resultant<Rat>(poly({-1, 0, 1}), poly({-4, 0, 1})) == 9);
    CHECK_THROWS_AS(sylvester_resultant<Rat>(PolyQ(), poly({1})), Error);
    // degree-zero arguments: Res(c, g) = c^deg(g)
    CHECK(sylvester_resultant<Rat>(poly({5}), poly({-1, 0, 0, 1})) == 125);
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Rat shared = random_rational(rng, 12, 5);
        Rat r1 = random_rational(rng, 12, 5);
        Rat r2 = random_rational(rng, 12, 5);
        PolyQ f = PolyQ(std::vector<Rat>{-shared, Rat(1)}) * PolyQ(std::vector<Rat>{-r1, Rat(1)});
        PolyQ g = PolyQ(std::vector<Rat>{-shared, Rat(1)}) * PolyQ(std::vector<Rat>{-r2, Rat(1)});
        CHECK(sylvester_resultant<Rat>(f, g) == 0);
        if (r1 != r2 && r1 != r2 + 1 && r2 != r1 + 1) {
            PolyQ h = PolyQ(std::vector<Rat>{-r1, Rat(1)}) * PolyQ(std::vector<Rat>{-r2, Rat(1)});
            PolyQ k = PolyQ(std::vector<Rat>{-r1 - 1, Rat(1)}) * PolyQ(std::vector<Rat>{-r2 - 1, Rat(1)});
            CHECK(sylvester_resultant<Rat>(h, k) != 0);
        }
    }
}

TEST_CASE("resultant antisymmetry sign") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 15; ++trial) {
        int m = static_cast<int>(uniform_ll(rng, 1, 4));
        int n = static_cast<int>(uniform_ll(rng, 1, 4));
        std::vector<Rat> fc, gc;
        for (int i = 0; i <= m; ++i) fc.push_back(Rat(uniform_nonzero(rng, 9)));
        for (int i = 0; i <= n; ++i) gc.push_back(Rat(uniform_nonzero(rng, 9)));
        PolyQ f(fc), g(gc);
        Rat ab = sylvester_resultant<Rat>(f, g);
        Rat ba = sylvester_resultant<Rat>(g, f);
        if ((m * n) % 2 == 0)
            CHECK(ab == ba);
        else
            CHECK(ab == -ba);
    }
}

TEST_CASE("poisson product check against the numeric roots") {
    std::mt19937_64 rng(5678);
    for (int trial = 0; trial < 10; ++trial) {
        int m = static_cast<int>(uniform_ll(rng, 2, 5));
        int n = static_cast<int>(uniform_ll(rng, 1, 4));
        std::vector<Rat> fc, gc;
        for (int i = 0; i < m; ++i) fc.push_back(Rat(uniform_nonzero(rng, 8)));
        fc.push_back(Rat(1));  // monic
        for (int i = 0; i <= n; ++i) gc.push_back(Rat(uniform_nonzero(rng, 8)));
        PolyQ f(fc), g(gc);
        Rat res = sylvester_resultant<Rat>(f, g);

        std::vector<UnivariateRoot> roots;
        try {
            roots = univariate_roots(f);
        } catch (const Error&) {
            continue;
        }
        std::complex<double> prod(1.0, 0.0);
        for (const UnivariateRoot& r : roots) {
            std::complex<double> gv(0.0, 0.0);
            for (int i = n; i >= 0; --i) gv = gv * r.value + std::complex<double>(rat_to_double(gc[i]), 0);
            for (int k = 0; k < r.multiplicity; ++k) prod *= gv;
        }
        double expect = rat_to_double(res);
        CHECK(std::abs(prod.imag()) < 1e-6 * std::max(1.0, std::abs(expect)));
        CHECK(std::abs(prod.real() - expect) < 1e-8 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("mu exponent cases") {
    CHECK(mu_exponent_1d({{0, 1}, {0, 1}}) == 1);
    CHECK(mu_exponent_1d({{0, 2}, {0, 2}}) == 2);
    CHECK(mu_exponent_1d({{5}, {0, 1}}) == 1);  // singleton against a unit edge
    CHECK(mu_exponent_1d({{5}, {0, 2}}) == 2);  // lattice length of the edge
    CHECK(mu_exponent_1d({{0, 2}, {0, 3}}) == 1);
    CHECK_THROWS_AS(mu_exponent_1d({{0}, {4}}), Error);
}

TEST_CASE("directional resultants of the quadrangle family") {
    std::mt19937_64 rng(31337);
    auto points_of = [](std::vector<LVec> verts) {
        return lattice_points(convex_hull(LatticeConfiguration(2, std::move(verts))));
    };
    const int n = 2;
    LatticeConfiguration p = points_of({{0, 0}, {0, n}, {1, n + 1}, {1, 1}});
    LatticeConfiguration q = points_of({{1, 0}, {0, 1}, {0, n + 1}, {1, n}});
    LaurentPolynomial f = random_polynomial(rng, p, 50);
    LaurentPolynomial g = random_polynomial(rng, q, 50);

    // (1,0) and (-1,0): classical resultants of two degree-n edge polynomials
    for (LVec v : {LVec{1, 0}, LVec{-1, 0}}) {
        FaceRestriction rf = restrict_to_face(f, v);
        FaceRestriction rg = restrict_to_face(g, v);
        auto [ef, sf] = dense_from_laurent_1d(rf.edge_poly);
        auto [eg, sg] = dense_from_laurent_1d(rg.edge_poly);
        CHECK(ef.deg() == n);
        CHECK(eg.deg() == n);
        DirectionalResultantRecord rec = directional_resultant(f, g, v);
        CHECK(rec.mu == 1);
        CHECK(rec.value == sylvester_resultant<Rat>(ef, eg));
    }

    // the remaining hexagon normals give single-coefficient powers
    LatticePolytope sum = minkowski_sum(convex_hull(p), convex_hull(q));
    for (const LVec& v : facet_normals(sum)) {
        if (v[0] == 1 && v[1] == 0) continue;
        if (v[0] == -1 && v[1] == 0) continue;
        DirectionalResultantRecord rec = directional_resultant(f, g, v);
        FaceRestriction rf = restrict_to_face(f, v);
        FaceRestriction rg = restrict_to_face(g, v);
        bool f_vertex = rf.restricted_support.size() == 1;
        bool g_vertex = rg.restricted_support.size() == 1;
        CHECK((f_vertex || g_vertex));
        const FaceRestriction& vertex_side = f_vertex ? rf : rg;
        Rat coeff = vertex_side.edge_poly.terms.begin()->second;
        Rat expected(1);
        for (long long k = 0; k < rec.mu; ++k) expected *= coeff;
        CHECK(abs(rec.value) == abs(expected));
    }

    // a non-normal direction gives 1
    DirectionalResultantRecord off = directional_resultant(f, g, {3, 7});
    CHECK(off.value == 1);
}

TEST_CASE("coordinate products for the interior-point triangle") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 15; ++trial) {
        Rat a1 = random_rational(rng, 20, 4), b1 = random_rational(rng, 20, 4);
        Rat a2 = random_rational(rng, 20, 4), b2 = random_rational(rng, 20, 4);
        if (a1 == a2 || b1 == b2 || a1 * b1 == a2 * b2 || a1 * b2 == a2 * b1) {
            --trial;
            continue;
        }
        auto [f, g] = interior_triangle_basis(a1, b1, a2, b2);
        CoordinateProduct px = product_of_coordinates({f, g}, 0);
        CoordinateProduct py = product_of_coordinates({f, g}, 1);
        Rat expect_x = a1 * a2 * b1 * b2 * (a1 - a2) * (a1 - a2) / ((b1 - b2) * (a1 * b1 - a2 * b2));
        Rat expect_y = a1 * a2 * b1 * b2 * (b1 - b2) * (b1 - b2) / ((a1 - a2) * (a1 * b1 - a2 * b2));
        CHECK(abs(px.value) == abs(expect_x));
        CHECK(abs(py.value) == abs(expect_y));
        CHECK(px.sign_ambiguous);
    }
}

TEST_CASE("coordinate products of systems with known roots") {
    // F = x - 5/3, G = y + 7/2: single torus root (5/3, -7/2)
    LaurentPolynomial f = from_terms(2, {{{1, 0}, Rat(1)}, {{0, 0}, Rat(-5, 3)}});
    LaurentPolynomial g = from_terms(2, {{{0, 1}, Rat(1)}, {{0, 0}, Rat(7, 2)}});
    CHECK(abs(product_of_coordinates({f, g}, 0).value) == Rat(5, 3));
    CHECK(abs(product_of_coordinates({f, g}, 1).value) == Rat(7, 2));

    // F = (x - 2)(x - 3/4), G = y - 5: products 3/2 and 25
    LaurentPolynomial f2 = from_terms(2, {{{2, 0}, Rat(1)}, {{1, 0}, Rat(-11, 4)}, {{0, 0}, Rat(3, 2)}});
    LaurentPolynomial g2 = from_terms(2, {{{0, 1}, Rat(1)}, {{0, 0}, Rat(-5)}});
    CHECK(abs(product_of_coordinates({f2, g2}, 0).value) == Rat(3, 2));
    CHECK(abs(product_of_coordinates({f2, g2}, 1).value) == Rat(25));
}

TEST_CASE("degenerate face system is reported") {
    // faces at v = (0,1) share the root s = 1: (1 - x) against (x - 1)
    LaurentPolynomial f = from_terms(2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(-1)}, {{0, 1}, Rat(1)}});
    LaurentPolynomial g = from_terms(2, {{{0, 0}, Rat(-1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
    CHECK_THROWS_AS(directional_resultant(f, g, {0, 1}), Error);
}
