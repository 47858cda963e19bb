#include <doctest.h>

#include "chasles/polynomials.hpp"

#include <random>

using namespace chasles;

namespace {

LaurentPolynomial from_terms(int d, std::vector<std::pair<Expo, Rat>> terms) {
    LaurentPolynomial f(d);
    for (auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

LatticeConfiguration interior_triangle() {
    return LatticeConfiguration(2, {{0, 0}, {1, 1}, {2, 1}, {1, 2}});
}

LaurentPolynomial random_laurent(std::mt19937_64& rng, int d, int nterms) {
    LaurentPolynomial f(d);
    for (int i = 0; i < nterms; ++i) {
        Expo e(d);
        for (int j = 0; j < d; ++j) e[j] = static_cast<int>(uniform_ll(rng, -3, 3));
        f.add_term(e, Rat(uniform_nonzero(rng, 20)));
    }
    return f;
}

// Is g in the span of the basis? The basis is reduced: each element is monic
// at its own free monomial and zero at the others, so the candidate
// combination is read off at those monomials.
bool in_span(const std::vector<LaurentPolynomial>& basis, const LaurentPolynomial& g) {
    LaurentPolynomial acc(g.d);
    for (const LaurentPolynomial& b : basis) {
        // find the free monomial: the one where b is 1 and all others vanish
        for (const auto& [e, c] : b.terms) {
            if (c != 1) continue;
            bool unique = true;
            for (const LaurentPolynomial& other : basis) {
                if (&other != &b && other.terms.count(e)) unique = false;
            }
            if (unique) {
                auto it = g.terms.find(e);
                if (it != g.terms.end()) acc = acc + b.scaled(it->second);
                break;
            }
        }
    }
    return acc == g;
}

}  // namespace

TEST_CASE("evaluate") {
    LaurentPolynomial f = from_terms(1, {{{3}, Rat(1)}, {{1}, Rat(-1)}});
    CHECK(evaluate(f, RationalPoint({Rat(2)})) == 6);

    LaurentPolynomial g =
        from_terms(2, {{{2, 1}, Rat(1)}, {{1, 2}, Rat(2)}, {{1, 1}, Rat(-5)}});
    CHECK(evaluate(g, RationalPoint({Rat(8), Rat(-3, 2)})) == 0);

    LaurentPolynomial c = LaurentPolynomial::constant(2, Rat(7));
    CHECK(evaluate(c, RationalPoint({Rat(11), Rat(-4, 3)})) == 7);
}

TEST_CASE("negative exponents need nonzero coordinates") {
    LaurentPolynomial f = from_terms(1, {{{-2}, Rat(1)}});
    CHECK(evaluate_at(f, {Rat(1, 2)}) == 4);
    CHECK_THROWS_AS(evaluate_at(f, {Rat(0)}), Error);
}

TEST_CASE("face restriction") {
    // generic polynomial on the unit square, restricted to the bottom edge
    LaurentPolynomial f = from_terms(
        2, {{{0, 0}, Rat(3)}, {{1, 0}, Rat(5)}, {{0, 1}, Rat(7)}, {{1, 1}, Rat(11)}});
    FaceRestriction bottom = restrict_to_face(f, {0, 1});
    CHECK(bottom.restricted_support.points == std::vector<LVec>{{0, 0}, {1, 0}});
    auto [edge, shift] = dense_from_laurent_1d(bottom.edge_poly);
    CHECK(edge.deg() == 1);

    LaurentPolynomial mono = from_terms(2, {{{2, 3}, Rat(9)}});
    FaceRestriction any = restrict_to_face(mono, {1, -1});
    CHECK(any.restricted_support.points == std::vector<LVec>{{2, 3}});

    // edge of the triangle with one interior point
    LaurentPolynomial g = from_terms(
        2, {{{0, 0}, Rat(1)}, {{1, 1}, Rat(1)}, {{2, 1}, Rat(1)}, {{1, 2}, Rat(1)}});
    FaceRestriction face = restrict_to_face(g, {-1, -1});
    CHECK(face.restricted_support.size() == 2);  // binomial on the far edge
}

TEST_CASE("face restriction keeps exactly the minimal-weight terms") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPolynomial f = random_laurent(rng, 2, 6);
        if (f.is_zero()) continue;
        LVec v = {uniform_nonzero(rng, 3), uniform_ll(rng, -3, 3)};
        FaceRestriction r = restrict_to_face(f, v);
        long long min_w = 0;
        bool first = true;
        for (const auto& [e, c] : f.terms) {
            long long w = v[0] * e[0] + v[1] * e[1];
            if (first || w < min_w) min_w = w, first = false;
        }
        for (const LVec& p : r.restricted_support.points) {
            CHECK(v[0] * p[0] + v[1] * p[1] == min_w);
        }
    }
}

TEST_CASE("vanishing space of the interior-point triangle") {
    std::vector<RationalPoint> pts = {RationalPoint({Rat(1), Rat(2)}),
                                      RationalPoint({Rat(3), Rat(1)})};
    std::vector<LaurentPolynomial> basis = vanishing_space(interior_triangle(), pts);
    REQUIRE(basis.size() == 2);
    for (const LaurentPolynomial& b : basis) {
        for (const RationalPoint& p : pts) CHECK(evaluate(b, p) == 0);
    }
    // contains xy(x + 2y - 5) up to scale
    LaurentPolynomial g =
        from_terms(2, {{{2, 1}, Rat(1)}, {{1, 2}, Rat(2)}, {{1, 1}, Rat(-5)}});
    CHECK(in_span(basis, g));
}

TEST_CASE("vanishing space of cubics through eight points") {
    std::mt19937_64 rng(777);
    std::vector<LVec> pts;
    for (long long i = 0; i <= 3; ++i)
        for (long long j = 0; i + j <= 3; ++j) pts.push_back({i, j});
    LatticeConfiguration cubic(2, pts);

    std::vector<RationalPoint> points;
    for (int i = 0; i < 8; ++i)
        points.push_back(RationalPoint({random_rational(rng, 9, 3), random_rational(rng, 9, 3)}));
    std::vector<LaurentPolynomial> basis = vanishing_space(cubic, points);
    REQUIRE(basis.size() == 2);

    // The span contains representatives monic in x^3 with no y^3 term and
    // vice versa: solve a 2x2 system on those two coefficients.
    Expo x3 = {3, 0}, y3 = {0, 3};
    auto coeff = [](const LaurentPolynomial& f, const Expo& e) {
        auto it = f.terms.find(e);
        return it == f.terms.end() ? Rat(0) : it->second;
    };
    Rat a = coeff(basis[0], x3), b = coeff(basis[1], x3);
    Rat c = coeff(basis[0], y3), d = coeff(basis[1], y3);
    Rat det = a * d - b * c;
    REQUIRE(det != 0);
    // combination with x^3 coefficient 1, y^3 coefficient 0
    Rat u = d / det, v = -c / det;
    LaurentPolynomial monic_x3 = basis[0].scaled(u) + basis[1].scaled(v);
    CHECK(coeff(monic_x3, x3) == 1);
    CHECK(coeff(monic_x3, y3) == 0);
    for (const RationalPoint& p : points) CHECK(evaluate(monic_x3, p) == 0);
}

TEST_CASE("vanishing space with no points is the full monomial basis") {
    std::vector<LaurentPolynomial> basis = vanishing_space(interior_triangle(), {});
    CHECK(basis.size() == 4);
    for (const LaurentPolynomial& b : basis) CHECK(b.terms.size() == 1);
}

TEST_CASE("vanishing space reports rank deficiency") {
    LatticeConfiguration support(2, {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}});
    std::vector<RationalPoint> aligned;
    for (long long t : {1, 2, 3, 4})
        aligned.push_back(RationalPoint({Rat(t), Rat(t)}));  // on the diagonal
    try {
        vanishing_space(support, aligned);
        FAIL("expected DegenerateInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateInput);
        CHECK(e.detail() == 2);  // rank of the evaluation matrix
    }
}

TEST_CASE("exact nullspace") {
    Matrix<Rat> id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(exact_nullspace(id).empty());

    Matrix<Rat> row = {{Rat(1), Rat(1)}};
    auto basis = exact_nullspace(row);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] + basis[0][1] == 0);
}

TEST_CASE("substitute") {
    LaurentPolynomial f = from_terms(2, {{{1, 2}, Rat(1)}});
    LaurentPolynomial x2 = from_terms(2, {{{2, 0}, Rat(1)}});
    LaurentPolynomial result = substitute(f, {{1, x2}});
    CHECK(result == from_terms(2, {{{5, 0}, Rat(1)}}));

    LaurentPolynomial c = LaurentPolynomial::constant(2, Rat(42));
    CHECK(substitute(c, {{0, x2}}) == c);

    LaurentPolynomial inv = from_terms(2, {{{0, -1}, Rat(1)}});
    LaurentPolynomial binomial = from_terms(2, {{{1, 0}, Rat(1)}, {{0, 0}, Rat(1)}});
    CHECK_THROWS_AS(substitute(inv, {{1, binomial}}), Error);
    // monomial images of negative powers are fine
    LaurentPolynomial mono = from_terms(2, {{{2, 0}, Rat(3)}});
    LaurentPolynomial ok = substitute(inv, {{1, mono}});
    CHECK(ok == from_terms(2, {{{-2, 0}, Rat(1, 3)}}));
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPolynomial f = random_laurent(rng, 2, 4);
        LaurentPolynomial g = random_laurent(rng, 2, 4);
        LaurentPolynomial h = random_laurent(rng, 2, 3);
        CHECK((f + g) * h == f * h + g * h);

        RationalPoint p({random_rational(rng, 7, 4), random_rational(rng, 7, 4)});
        CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
        CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
    }
}

TEST_CASE("parametric vanishing space matches specialization") {
    // Points (1,1), (2,4), (t,t^2) on the 5-point triangle; specializing t=3
    // must give the same space as the rational computation at (3,9).
    LatticeConfiguration a(2, {{0, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 1}});
    PolyQ one(Rat(1));
    PolyQ t(std::vector<Rat>{Rat(0), Rat(1)});
    PolyQ t2(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    ParametricVanishing van = vanishing_space_parametric(
        a, {{one, one}, {PolyQ(Rat(2)), PolyQ(Rat(4))}, {t, t2}});
    REQUIRE(van.basis.size() == 2);

    for (const auto& vec : van.basis) {
        // evaluate at (x, y) = each input point, as a polynomial in t
        std::vector<std::vector<PolyQ>> points = {
            {one, one}, {PolyQ(Rat(2)), PolyQ(Rat(4))}, {t, t2}};
        for (const auto& pt : points) {
            PolyQ acc;
            for (size_t m = 0; m < van.monomials.size(); ++m) {
                if (vec[m].is_zero()) continue;
                PolyQ val(Rat(1));
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < van.monomials[m][i]; ++k) val = val * pt[i];
                acc = acc + vec[m] * val;
            }
            CHECK(acc.is_zero());
        }
    }
}
