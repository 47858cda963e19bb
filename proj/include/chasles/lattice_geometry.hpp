#ifndef CHASLES_LATTICE_GEOMETRY_HPP
#define CHASLES_LATTICE_GEOMETRY_HPP

#include "chasles/error.hpp"
#include "chasles/linalg.hpp"
#include "chasles/rational.hpp"

#include <utility>
#include <vector>

namespace chasles {

using LVec = std::vector<long long>;

/// Finite set of lattice points in Z^d. Points are kept sorted; duplicates
/// are rejected.
struct LatticeConfiguration {
    int d = 0;
    std::vector<LVec> points;

    LatticeConfiguration() = default;
    LatticeConfiguration(int dim_ambient, std::vector<LVec> pts);

    size_t size() const { return points.size(); }
    bool operator==(const LatticeConfiguration& o) const { return d == o.d && points == o.points; }
};

/// Inner facet description: normal . x >= offset for all points of the
/// polytope, with equality on the facet. Normals are primitive.
struct Facet {
    LVec normal;
    long long offset = 0;
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

struct LatticePolytope {
    int d = 0;          // ambient dimension
    int dim = 0;        // affine dimension
    bool degenerate = false;  // dim < d; no facet description in that case
    std::vector<LVec> vertices;
    std::vector<Facet> facets;
};

/// Affine-linear lattice automorphism x -> M x + t with |det M| = 1.
struct UnimodularMap {
    std::vector<LVec> matrix;  // rows
    LVec translation;

    UnimodularMap(std::vector<LVec> m, LVec t);
    LVec apply(const LVec& p) const;
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& inner) const;  // this ∘ inner
};

int dimension(const LatticeConfiguration& a);

LatticePolytope convex_hull(const LatticeConfiguration& a);

LatticeConfiguration lattice_points(const LatticePolytope& p);

bool is_saturated(const LatticeConfiguration& a);

/// d! times the Euclidean volume of conv(A); 0 when A is lower-dimensional.
/// Computed by an incremental placing triangulation with exact determinants.
long long normalized_volume(const LatticeConfiguration& a);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Mixed volume (normalized convention: mvol(P,...,P) = vol(P)) of the
/// multiset that repeats entry i multiplicity[i] times. Multiplicities must
/// sum to the ambient dimension.
long long mixed_volume(const std::vector<std::pair<LatticeConfiguration, int>>& entries);

struct PickCounts {
    long long interior = 0;
    long long boundary = 0;
};
PickCounts pick_counts(const LatticeConfiguration& a);

std::vector<LVec> facet_normals(const LatticePolytope& p);

LatticeConfiguration apply_unimodular(const LatticeConfiguration& a, const UnimodularMap& t);

/// Random product of elementary shears, swaps, negations and a translation.
template <class Rng>
UnimodularMap random_unimodular(Rng& rng, int d, int ops, long long translation_bound) {
    std::vector<LVec> m(d, LVec(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    for (int k = 0; k < ops; ++k) {
        int kind = static_cast<int>(uniform_ll(rng, 0, 2));
        int i = static_cast<int>(uniform_ll(rng, 0, d - 1));
        int j = static_cast<int>(uniform_ll(rng, 0, d - 1));
        if (kind == 0 && i != j) {
            long long lambda = uniform_nonzero(rng, 3);
            for (int c = 0; c < d; ++c) m[i][c] += lambda * m[j][c];
        } else if (kind == 1 && i != j) {
            std::swap(m[i], m[j]);
        } else {
            for (int c = 0; c < d; ++c) m[i][c] = -m[i][c];
        }
    }
    LVec t(d);
    for (int c = 0; c < d; ++c) t[c] = uniform_ll(rng, -translation_bound, translation_bound);
    return UnimodularMap(std::move(m), std::move(t));
}

// --- internals shared with other modules ---

/// Lattice coordinates on the saturation of the affine hull of a point set.
struct AffineChart {
    LVec base;
    Matrix<Int> basis_cols;  // one column per chart coordinate
    int r = 0;               // chart dimension

    LVec to_chart(const LVec& ambient) const;
    LVec to_ambient(const LVec& chart) const;
};
AffineChart make_chart(const std::vector<LVec>& pts);

/// Placing (beneath-beyond) triangulation of a point set, processed in
/// lexicographic order.
struct PlacingTriangulation {
    std::vector<LVec> pts;  // sorted unique
    int dim = 0;
    std::vector<std::vector<int>> simplices;
};
PlacingTriangulation placing_triangulation(std::vector<LVec> pts, int d);

std::vector<LVec> hull_vertices_2d(std::vector<LVec> pts);  // ccw cycle

Int integer_determinant(const Matrix<Int>& m);

}  // namespace chasles

#endif
