#include "chasles/lattice_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chasles {

namespace {

Matrix<Int> difference_rows(const std::vector<LVec>& pts) {
    Matrix<Int> rows;
    if (pts.empty()) return rows;
    const LVec& base = pts.front();
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Int> row(base.size());
        for (size_t j = 0; j < base.size(); ++j) row[j] = Int(pts[i][j]) - Int(base[j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

long long narrow(const Int& v) {
    return v.convert_to<long long>();
}

using I128 = __int128;

I128 cross2(const LVec& o, const LVec& a, const LVec& b) {
    return I128(a[0] - o[0]) * I128(b[1] - o[1]) - I128(a[1] - o[1]) * I128(b[0] - o[0]);
}

I128 sqdist2(const LVec& a, const LVec& b) {
    return I128(a[0] - b[0]) * I128(a[0] - b[0]) + I128(a[1] - b[1]) * I128(a[1] - b[1]);
}

}  // namespace

Int integer_determinant(const Matrix<Int>& m) { return bareiss_determinant<Int>(m); }

LatticeConfiguration::LatticeConfiguration(int dim_ambient, std::vector<LVec> pts)
    : d(dim_ambient), points(std::move(pts)) {
    if (d <= 0) throw Error(ErrorKind::ParseError, "ambient dimension must be positive");
    if (points.empty()) throw Error(ErrorKind::ParseError, "configuration needs at least one point");
    for (const LVec& p : points) {
        if (static_cast<int>(p.size()) != d)
            throw Error(ErrorKind::DimensionMismatch, "point length differs from ambient dimension");
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw Error(ErrorKind::ParseError, "duplicate point in configuration");
}

UnimodularMap::UnimodularMap(std::vector<LVec> m, LVec t)
    : matrix(std::move(m)), translation(std::move(t)) {
    const int d = static_cast<int>(matrix.size());
    if (d == 0 || static_cast<int>(translation.size()) != d)
        throw Error(ErrorKind::DimensionMismatch, "unimodular map shape");
    Matrix<Int> mi(d, std::vector<Int>(d));
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(matrix[i].size()) != d)
            throw Error(ErrorKind::DimensionMismatch, "unimodular map shape");
        for (int j = 0; j < d; ++j) mi[i][j] = matrix[i][j];
    }
    Int det = integer_determinant(mi);
    if (det != 1 && det != -1) throw Error(ErrorKind::ParseError, "matrix determinant is not ±1");
}

LVec UnimodularMap::apply(const LVec& p) const {
    const int d = static_cast<int>(matrix.size());
    LVec out(d, 0);
    for (int i = 0; i < d; ++i) {
        long long acc = translation[i];
        for (int j = 0; j < d; ++j) acc += matrix[i][j] * p[j];
        out[i] = acc;
    }
    return out;
}

UnimodularMap UnimodularMap::inverse() const {
    const int d = static_cast<int>(matrix.size());
    // Rational inverse; entries are integers because |det| = 1.
    Matrix<Rat> aug(d, std::vector<Rat>(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = Rat(matrix[i][j]);
        aug[i][d + i] = 1;
    }
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int i = c; i < d; ++i) {
            if (aug[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        std::swap(aug[c], aug[pivot]);
        Rat lead = aug[c][c];
        for (int j = 0; j < 2 * d; ++j) aug[c][j] /= lead;
        for (int i = 0; i < d; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<LVec> inv(d, LVec(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Rat& e = aug[i][d + j];
            inv[i][j] = narrow(numerator(e));
        }
    }
    // x = M y + t  =>  y = M^-1 x - M^-1 t
    LVec t(d, 0);
    for (int i = 0; i < d; ++i) {
        long long acc = 0;
        for (int j = 0; j < d; ++j) acc += inv[i][j] * translation[j];
        t[i] = -acc;
    }
    return UnimodularMap(std::move(inv), std::move(t));
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
    const int d = static_cast<int>(matrix.size());
    std::vector<LVec> m(d, LVec(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) m[i][j] += matrix[i][k] * inner.matrix[k][j];
    LVec t = apply(inner.translation);
    return UnimodularMap(std::move(m), std::move(t));
}

int dimension(const LatticeConfiguration& a) {
    if (a.points.size() <= 1) return 0;
    return matrix_rank<Int>(difference_rows(a.points));
}

AffineChart make_chart(const std::vector<LVec>& pts) {
    AffineChart chart;
    chart.base = pts.front();
    const int d = static_cast<int>(chart.base.size());
    Matrix<Int> diffs = difference_rows(pts);
    if (diffs.empty()) {
        chart.r = 0;
        return chart;
    }
    Matrix<Int> basis = saturation_basis(diffs, d);
    chart.r = static_cast<int>(basis.size());
    chart.basis_cols = std::move(basis);
    return chart;
}

LVec AffineChart::to_chart(const LVec& ambient) const {
    std::vector<Int> v(base.size());
    for (size_t i = 0; i < base.size(); ++i) v[i] = Int(ambient[i]) - Int(base[i]);
    std::vector<Rat> c = solve_columns(basis_cols, v);
    LVec out(r);
    for (int i = 0; i < r; ++i) {
        if (denominator(c[i]) != 1)
            throw Error(ErrorKind::DegenerateInput, "point outside the affine lattice");
        out[i] = narrow(numerator(c[i]));
    }
    return out;
}

LVec AffineChart::to_ambient(const LVec& chart) const {
    LVec out(base);
    for (int j = 0; j < r; ++j) {
        for (size_t i = 0; i < base.size(); ++i) out[i] += narrow(basis_cols[j][i]) * chart[j];
    }
    return out;
}

PlacingTriangulation placing_triangulation(std::vector<LVec> pts, int d) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    PlacingTriangulation out;
    out.pts = pts;
    if (pts.empty()) return out;

    std::vector<int> basis = {0};
    std::vector<std::vector<int>> simplices = {{0}};
    int dim = 0;

    auto independent = [&](int k) {
        Matrix<Int> rows;
        for (size_t i = 1; i < basis.size(); ++i) {
            std::vector<Int> row(d);
            for (int j = 0; j < d; ++j) row[j] = Int(pts[basis[i]][j]) - Int(pts[basis[0]][j]);
            rows.push_back(std::move(row));
        }
        std::vector<Int> row(d);
        for (int j = 0; j < d; ++j) row[j] = Int(pts[k][j]) - Int(pts[basis[0]][j]);
        rows.push_back(std::move(row));
        return matrix_rank<Int>(rows) == static_cast<int>(rows.size());
    };

    // Sign of the orientation determinant of (q1-q0, ..., q_{dim-1}-q0, x-q0)
    // in coordinates of the current affine span.
    auto orient = [&](const std::vector<int>& face, const LVec& x) -> int {
        const int m = dim;
        if (m == static_cast<int>(x.size())) {
            Matrix<Int> rows;
            for (int i = 1; i < m; ++i) {
                std::vector<Int> row(m);
                for (int j = 0; j < m; ++j) row[j] = Int(pts[face[i]][j]) - Int(pts[face[0]][j]);
                rows.push_back(std::move(row));
            }
            std::vector<Int> row(m);
            for (int j = 0; j < m; ++j) row[j] = Int(x[j]) - Int(pts[face[0]][j]);
            rows.push_back(std::move(row));
            Int det = integer_determinant(rows);
            return det == 0 ? 0 : (det > 0 ? 1 : -1);
        }
        // Lower-dimensional interim span: solve for chart coordinates.
        Matrix<Int> basis_cols;
        for (size_t i = 1; i < basis.size(); ++i) {
            std::vector<Int> col(x.size());
            for (size_t j = 0; j < x.size(); ++j)
                col[j] = Int(pts[basis[i]][j]) - Int(pts[basis[0]][j]);
            basis_cols.push_back(std::move(col));
        }
        auto coords = [&](const LVec& v) {
            std::vector<Int> delta(x.size());
            for (size_t j = 0; j < x.size(); ++j) delta[j] = Int(v[j]) - Int(pts[face[0]][j]);
            return solve_columns(basis_cols, delta);
        };
        Matrix<Rat> rows;
        for (int i = 1; i < m; ++i) rows.push_back(coords(pts[face[i]]));
        rows.push_back(coords(x));
        Rat det = bareiss_determinant<Rat>(rows);
        return det == 0 ? 0 : (det > 0 ? 1 : -1);
    };

    for (int k = 1; k < static_cast<int>(pts.size()); ++k) {
        if (dim < d && independent(k)) {
            for (auto& s : simplices) s.push_back(k);
            basis.push_back(k);
            ++dim;
            continue;
        }
        // Point lies in the current span and, by the lex order, outside the
        // hull of the processed points: cone the visible boundary faces.
        std::map<std::vector<int>, std::pair<int, int>> face_info;  // face -> (count, opposite vertex)
        for (const auto& s : simplices) {
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = face_info.find(face);
                if (it == face_info.end())
                    face_info[face] = {1, s[drop]};
                else
                    it->second.first += 1;
            }
        }
        std::vector<std::vector<int>> added;
        for (const auto& [face, info] : face_info) {
            if (info.first != 1) continue;
            int side_new = orient(face, pts[k]);
            if (side_new == 0) continue;
            int side_in = orient(face, pts[info.second]);
            if (side_new == side_in) continue;
            std::vector<int> s = face;
            s.push_back(k);
            std::sort(s.begin(), s.end());
            added.push_back(std::move(s));
        }
        simplices.insert(simplices.end(), added.begin(), added.end());
    }

    out.dim = dim;
    out.simplices = std::move(simplices);
    return out;
}

std::vector<LVec> hull_vertices_2d(std::vector<LVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    // Gift wrapping with exact predicates; collinear candidates resolved by
    // taking the farthest, so only true vertices are emitted.
    std::vector<LVec> hull;
    LVec start = pts.front();
    LVec cur = start;
    do {
        hull.push_back(cur);
        LVec next = pts[0] == cur ? pts[1] : pts[0];
        for (const LVec& cand : pts) {
            if (cand == cur) continue;
            I128 c = cross2(cur, next, cand);
            if (c < 0 || (c == 0 && sqdist2(cur, cand) > sqdist2(cur, next))) next = cand;
        }
        cur = next;
        if (hull.size() > pts.size()) throw Error(ErrorKind::DegenerateHull, "gift wrapping failed");
    } while (cur != start);
    return hull;
}

namespace {

LatticePolytope hull_full_dim(const std::vector<LVec>& pts, int d) {
    LatticePolytope poly;
    poly.d = d;
    poly.dim = d;

    if (d == 1) {
        long long lo = pts.front()[0], hi = pts.front()[0];
        for (const LVec& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        poly.vertices = {{lo}, {hi}};
        poly.facets = {{{1}, lo}, {{-1}, -hi}};
        return poly;
    }

    if (d == 2) {
        std::vector<LVec> cycle = hull_vertices_2d(pts);
        poly.vertices = cycle;
        std::sort(poly.vertices.begin(), poly.vertices.end());
        for (size_t i = 0; i < cycle.size(); ++i) {
            const LVec& a = cycle[i];
            const LVec& b = cycle[(i + 1) % cycle.size()];
            // ccw cycle: interior lies left of a->b, inner normal (-ey, ex)
            std::vector<Int> n = {Int(-(b[1] - a[1])), Int(b[0] - a[0])};
            n = primitive_vector(n);
            Facet f;
            f.normal = {narrow(n[0]), narrow(n[1])};
            f.offset = f.normal[0] * a[0] + f.normal[1] * a[1];
            poly.facets.push_back(std::move(f));
        }
        std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& x, const Facet& y) {
            return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
        });
        return poly;
    }

    PlacingTriangulation tri = placing_triangulation(pts, d);
    // Boundary faces (appearing in exactly one simplex) lie on hull facets.
    std::map<std::vector<int>, std::pair<int, int>> face_info;
    for (const auto& s : tri.simplices) {
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> face;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            auto it = face_info.find(face);
            if (it == face_info.end())
                face_info[face] = {1, s[drop]};
            else
                it->second.first += 1;
        }
    }
    std::set<std::pair<LVec, long long>> facet_set;
    for (const auto& [face, info] : face_info) {
        if (info.first != 1) continue;
        Matrix<Int> rows;
        for (size_t i = 1; i < face.size(); ++i) {
            std::vector<Int> row(d);
            for (int j = 0; j < d; ++j) row[j] = Int(tri.pts[face[i]][j]) - Int(tri.pts[face[0]][j]);
            rows.push_back(std::move(row));
        }
        Matrix<Int> kern = integer_kernel(rows, d);
        std::vector<Int> n = primitive_vector(kern.front());
        Int off(0), wit(0);
        for (int j = 0; j < d; ++j) {
            off += n[j] * tri.pts[face[0]][j];
            wit += n[j] * tri.pts[info.second][j];
        }
        if (wit < off) {
            for (Int& e : n) e = -e;
            off = -off;
        }
        LVec nv(d);
        for (int j = 0; j < d; ++j) nv[j] = narrow(n[j]);
        facet_set.insert({nv, narrow(off)});
    }
    for (const auto& [n, off] : facet_set) poly.facets.push_back(Facet{n, off});

    // Vertices: points whose tight facet normals span R^d.
    for (const LVec& p : tri.pts) {
        Matrix<Int> tight;
        for (const Facet& f : poly.facets) {
            long long val = 0;
            for (int j = 0; j < d; ++j) val += f.normal[j] * p[j];
            if (val == f.offset) {
                std::vector<Int> row(d);
                for (int j = 0; j < d; ++j) row[j] = f.normal[j];
                tight.push_back(std::move(row));
            }
        }
        if (static_cast<int>(tight.size()) >= d && matrix_rank<Int>(tight) == d)
            poly.vertices.push_back(p);
    }
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

}  // namespace

LatticePolytope convex_hull(const LatticeConfiguration& a) {
    const int r = dimension(a);
    if (r == a.d) return hull_full_dim(a.points, a.d);

    LatticePolytope poly;
    poly.d = a.d;
    poly.dim = r;
    poly.degenerate = true;
    if (r == 0) {
        poly.vertices = a.points;
        return poly;
    }
    AffineChart chart = make_chart(a.points);
    std::vector<LVec> chart_pts;
    chart_pts.reserve(a.points.size());
    for (const LVec& p : a.points) chart_pts.push_back(chart.to_chart(p));
    LatticePolytope inner = hull_full_dim(chart_pts, r);
    for (const LVec& v : inner.vertices) poly.vertices.push_back(chart.to_ambient(v));
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

LatticeConfiguration lattice_points(const LatticePolytope& p) {
    if (p.degenerate) {
        if (p.dim == 0) return LatticeConfiguration(p.d, p.vertices);
        AffineChart chart = make_chart(p.vertices);
        std::vector<LVec> chart_pts;
        for (const LVec& v : p.vertices) chart_pts.push_back(chart.to_chart(v));
        LatticePolytope inner = hull_full_dim(chart_pts, chart.r);
        LatticeConfiguration inner_pts = lattice_points(inner);
        std::vector<LVec> out;
        for (const LVec& c : inner_pts.points) out.push_back(chart.to_ambient(c));
        return LatticeConfiguration(p.d, std::move(out));
    }

    LVec lo(p.d), hi(p.d);
    for (int j = 0; j < p.d; ++j) {
        lo[j] = hi[j] = p.vertices.front()[j];
        for (const LVec& v : p.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    std::vector<LVec> found;
    LVec cur = lo;
    while (true) {
        bool inside = true;
        for (const Facet& f : p.facets) {
            long long val = 0;
            for (int j = 0; j < p.d; ++j) val += f.normal[j] * cur[j];
            if (val < f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) found.push_back(cur);
        int j = 0;
        for (; j < p.d; ++j) {
            if (cur[j] < hi[j]) {
                ++cur[j];
                for (int i = 0; i < j; ++i) cur[i] = lo[i];
                break;
            }
        }
        if (j == p.d) break;
    }
    return LatticeConfiguration(p.d, std::move(found));
}

bool is_saturated(const LatticeConfiguration& a) {
    return lattice_points(convex_hull(a)) == a;
}

long long normalized_volume(const LatticeConfiguration& a) {
    if (dimension(a) < a.d) return 0;
    PlacingTriangulation tri = placing_triangulation(a.points, a.d);
    Int vol(0);
    for (const auto& s : tri.simplices) {
        Matrix<Int> rows;
        for (size_t i = 1; i < s.size(); ++i) {
            std::vector<Int> row(a.d);
            for (int j = 0; j < a.d; ++j) row[j] = Int(tri.pts[s[i]][j]) - Int(tri.pts[s[0]][j]);
            rows.push_back(std::move(row));
        }
        Int det = integer_determinant(rows);
        vol += abs(det);
    }
    return narrow(vol);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.d != q.d) throw Error(ErrorKind::DimensionMismatch, "Minkowski sum of different ambient dimensions");
    std::vector<LVec> sums;
    for (const LVec& u : p.vertices) {
        for (const LVec& v : q.vertices) {
            LVec s(p.d);
            for (int j = 0; j < p.d; ++j) s[j] = u[j] + v[j];
            sums.push_back(std::move(s));
        }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return convex_hull(LatticeConfiguration(p.d, std::move(sums)));
}

long long mixed_volume(const std::vector<std::pair<LatticeConfiguration, int>>& entries) {
    if (entries.empty()) throw Error(ErrorKind::DimensionMismatch, "mixed volume needs entries");
    const int d = entries.front().first.d;
    int total = 0;
    for (const auto& [cfg, mult] : entries) {
        if (cfg.d != d) throw Error(ErrorKind::DimensionMismatch, "mixed volume entries in different dimensions");
        if (mult <= 0) throw Error(ErrorKind::DimensionMismatch, "multiplicities must be positive");
        total += mult;
    }
    if (total != d)
        throw Error(ErrorKind::DimensionMismatch, "multiplicities must sum to the ambient dimension");

    std::vector<std::vector<LVec>> vertex_sets;
    for (const auto& [cfg, mult] : entries) vertex_sets.push_back(convex_hull(cfg).vertices);

    const int parts = static_cast<int>(entries.size());
    std::vector<int> counts(parts, 0);
    Int acc(0);

    auto binom = [](int n, int k) {
        Int r(1);
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };

    while (true) {
        int j = 0;
        for (; j < parts; ++j) {
            if (counts[j] < entries[j].second) {
                ++counts[j];
                for (int i = 0; i < j; ++i) counts[i] = 0;
                break;
            }
        }
        if (j == parts) break;

        int k = 0;
        Int ways(1);
        for (int i = 0; i < parts; ++i) {
            k += counts[i];
            ways *= binom(entries[i].second, counts[i]);
        }
        std::vector<LVec> pts = {LVec(d, 0)};
        for (int i = 0; i < parts; ++i) {
            if (counts[i] == 0) continue;
            std::vector<LVec> next;
            for (const LVec& base : pts) {
                for (const LVec& v : vertex_sets[i]) {
                    LVec s(d);
                    for (int c = 0; c < d; ++c) s[c] = base[c] + counts[i] * v[c];
                    next.push_back(std::move(s));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            pts = std::move(next);
        }
        long long vol = normalized_volume(LatticeConfiguration(d, std::move(pts)));
        Int term = ways * vol;
        if ((d - k) % 2 == 1) term = -term;
        acc += term;
    }

    Int fact(1);
    for (int i = 2; i <= d; ++i) fact *= i;
    if (acc % fact != 0) throw Error(ErrorKind::DimensionMismatch, "mixed volume not integral");
    Int mv = acc / fact;
    if (mv < 0) throw Error(ErrorKind::DimensionMismatch, "negative mixed volume");
    return narrow(mv);
}

PickCounts pick_counts(const LatticeConfiguration& a) {
    if (a.d != 2 || dimension(a) != 2)
        throw Error(ErrorKind::DegenerateConfiguration, "pick_counts needs a full-dimensional planar configuration");
    LatticePolytope hull = convex_hull(a);
    LatticeConfiguration pts = lattice_points(hull);
    PickCounts out;
    for (const LVec& p : pts.points) {
        bool on_boundary = false;
        for (const Facet& f : hull.facets) {
            if (f.normal[0] * p[0] + f.normal[1] * p[1] == f.offset) {
                on_boundary = true;
                break;
            }
        }
        if (on_boundary)
            ++out.boundary;
        else
            ++out.interior;
    }
    return out;
}

std::vector<LVec> facet_normals(const LatticePolytope& p) {
    if (p.degenerate) throw Error(ErrorKind::DegenerateHull, "no facet description for a lower-dimensional polytope");
    std::vector<LVec> normals;
    for (const Facet& f : p.facets) normals.push_back(f.normal);
    std::sort(normals.begin(), normals.end());
    return normals;
}

LatticeConfiguration apply_unimodular(const LatticeConfiguration& a, const UnimodularMap& t) {
    if (static_cast<int>(t.matrix.size()) != a.d)
        throw Error(ErrorKind::DimensionMismatch, "map dimension differs from configuration");
    std::vector<LVec> pts;
    pts.reserve(a.points.size());
    for (const LVec& p : a.points) pts.push_back(t.apply(p));
    return LatticeConfiguration(a.d, std::move(pts));
}

}  // namespace chasles
