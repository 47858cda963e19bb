#ifndef CHASLES_RESULTANTS_HPP
#define CHASLES_RESULTANTS_HPP

#include "chasles/polynomials.hpp"
#include "chasles/univariate.hpp"

#include <vector>

namespace chasles {

/// Determinant of the (deg f + deg g)-square Sylvester matrix, by
/// fraction-free (Bareiss) elimination over the coefficient domain.
template <class T>
T sylvester_resultant(const DensePoly<T>& f, const DensePoly<T>& g) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
    const int m = f.deg();
    const int n = g.deg();
    const int size = m + n;
    if (size == 0) return T(1);
    Matrix<T> s(size, std::vector<T>(size, T(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
    return bareiss_determinant<T>(std::move(s));
}

/// Exponent applied to the reduced face resultant (the joint sublattice index
/// for a pair of edges; the lattice length of the edge when the other face is
/// a single point). Throws NotEssential when both supports are single points.
long long mu_exponent_1d(const std::vector<std::vector<long long>>& supports);

struct DirectionalResultantRecord {
    LVec normal;
    Rat value;               // mRes, up to sign
    long long mu = 1;        // exponent of the reduced-face resultant
    long long lattice_index = 1;  // sublattice index factor of mu
};

/// Directional resultant of a pair of planar Laurent polynomials with respect
/// to the weight vector v: both polynomials are restricted to their v-face,
/// monomial content is stripped, the faces are rewritten in the lattice they
/// jointly generate, and the Sylvester resultant there is raised to the joint
/// sublattice index. Returns value 1 when both faces are vertices (v is not
/// an inner facet normal of the Minkowski sum).
DirectionalResultantRecord directional_resultant(const LaurentPolynomial& f,
                                                 const LaurentPolynomial& g, const LVec& v);

struct CoordinateProduct {
    Rat value;                 // the product, with an unresolved global sign
    bool sign_ambiguous = true;
    std::vector<DirectionalResultantRecord> records;
};

/// Product of the i-th coordinates over all torus roots (with multiplicity)
/// of f = g = 0, up to sign: the product of directional resultants over the
/// inner facet normals of the Minkowski sum of the Newton polytopes, each
/// raised to normal.e_i. Throws FaceSystemDegenerate when a face resultant
/// vanishes.
CoordinateProduct product_of_coordinates(const std::vector<LaurentPolynomial>& polys, int i);

}  // namespace chasles

#endif
