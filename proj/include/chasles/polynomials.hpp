#ifndef CHASLES_POLYNOMIALS_HPP
#define CHASLES_POLYNOMIALS_HPP

#include "chasles/error.hpp"
#include "chasles/lattice_geometry.hpp"
#include "chasles/rational.hpp"
#include "chasles/univariate.hpp"

#include <map>
#include <vector>

namespace chasles {

using Expo = std::vector<int>;

/// Graded lexicographic order (total degree first, then lex).
bool grlex_less(const Expo& a, const Expo& b);

/// Multivariate Laurent polynomial with exact rational coefficients. Terms
/// with zero coefficient are never stored.
struct LaurentPolynomial {
    int d = 0;
    std::map<Expo, Rat> terms;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int dim) : d(dim) {}

    static LaurentPolynomial term(int dim, Expo e, Rat c);
    static LaurentPolynomial constant(int dim, Rat c);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Expo& e, const Rat& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial scaled(const Rat& s) const;

    bool operator==(const LaurentPolynomial& o) const { return d == o.d && terms == o.terms; }

    /// Support as a lattice configuration.
    LatticeConfiguration support() const;
};

/// Point of the algebraic torus: all coordinates nonzero.
struct RationalPoint {
    std::vector<Rat> coords;
    RationalPoint() = default;  // empty placeholder; the validating ctor enforces the invariant
    explicit RationalPoint(std::vector<Rat> c);
    bool operator==(const RationalPoint& o) const { return coords == o.coords; }
};

Rat evaluate(const LaurentPolynomial& f, const RationalPoint& p);
Rat evaluate_at(const LaurentPolynomial& f, const std::vector<Rat>& coords);

/// Restriction of f to its face of minimal weight with respect to v.
struct FaceRestriction {
    LVec normal;
    LatticeConfiguration restricted_support;
    LVec shift;                  // lex-smallest minimal-weight exponent
    LaurentPolynomial edge_poly; // univariate (d = 1), in v-perp coordinates; d = 2 only
};

FaceRestriction restrict_to_face(const LaurentPolynomial& f, const LVec& v);

/// Basis (reduced w.r.t. descending graded-lex column order: pivots are taken
/// on the grlex-largest independent monomials, each basis element is monic at
/// its own free monomial and vanishes at the others) of the space of Laurent
/// polynomials supported on `entry` vanishing at all given points.
/// Throws DegenerateInput (with the rank as detail) when the evaluation
/// matrix has rank below the number of points.
std::vector<LaurentPolynomial> vanishing_space(const LatticeConfiguration& entry,
                                               const std::vector<RationalPoint>& points);

/// Exact kernel basis of a rational matrix (fraction-free elimination).
/// Vectors are monic at their free column.
std::vector<std::vector<Rat>> exact_nullspace(const Matrix<Rat>& m);

/// Substitutes assignments[i] for variable i. Negative exponents only accept
/// monomial images.
LaurentPolynomial substitute(const LaurentPolynomial& f,
                             const std::map<int, LaurentPolynomial>& assignments);

LaurentPolynomial partial_derivative(const LaurentPolynomial& f, int var);

/// Swaps the roles of the two variables of a planar polynomial.
LaurentPolynomial swap_xy(const LaurentPolynomial& f);

// --- parametric variant (coordinates and coefficients in Q[t]) ---

/// Vanishing space where point coordinates are univariate polynomials in a
/// parameter. Returns coefficient vectors over Q[t], aligned with `monomials`
/// (the support in descending graded-lex order); vectors are content-free
/// with the free-position polynomial sign-normalized.
struct ParametricVanishing {
    std::vector<Expo> monomials;
    std::vector<std::vector<PolyQ>> basis;
    int rank = 0;
};
ParametricVanishing vanishing_space_parametric(const LatticeConfiguration& entry,
                                               const std::vector<std::vector<PolyQ>>& points);

// --- conversions used by resultant and solver code ---

/// One-variable Laurent polynomial to dense form: returns (p, m) with
/// f = x^m * p and p(0) != 0.
std::pair<PolyQ, long long> dense_from_laurent_1d(const LaurentPolynomial& f);

/// Two-variable Laurent polynomial as a dense polynomial in the second
/// variable over Q[first]; Laurent content is stripped beforehand.
PolyQQ dense_yx_from_laurent(const LaurentPolynomial& f);

/// Three-variable Laurent polynomial as a dense polynomial in variable
/// `outer` whose coefficients are dense in `mid` over Q[inner].
DensePoly<PolyQQ> dense_3d_from_laurent(const LaurentPolynomial& f, int outer, int mid, int inner);

}  // namespace chasles

#endif
