#include "chasles/classifier.hpp"

#include "chasles/chasles_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chasles {

namespace {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct M2 {
    long long a, b, c, d;  // [[a, b], [c, d]]
    long long det() const { return a * d - b * c; }
};

M2 mul(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

// Row Hermite form of a nonsingular 2x2 integer matrix: returns U with
// U * m upper triangular, positive diagonal, the off-diagonal entry reduced.
M2 row_hnf_transform(M2 m) {
    M2 u{1, 0, 0, 1};
    auto row_sub = [&](long long q) {  // row0 -= q * row1
        m.a -= q * m.c;
        m.b -= q * m.d;
        u.a -= q * u.c;
        u.b -= q * u.d;
    };
    auto row_swap = [&]() {
        std::swap(m.a, m.c);
        std::swap(m.b, m.d);
        std::swap(u.a, u.c);
        std::swap(u.b, u.d);
    };
    while (m.c != 0) {
        row_sub(m.a / m.c);
        row_swap();
    }
    if (m.a < 0) {
        m.a = -m.a;
        m.b = -m.b;
        u.a = -u.a;
        u.b = -u.b;
    }
    if (m.d < 0) {
        m.d = -m.d;
        u.c = -u.c;
        u.d = -u.d;
    }
    if (m.d != 0) {
        long long q = m.b / m.d;
        if (m.b - q * m.d < 0) q -= 1;  // floor
        row_sub(q);
    }
    return u;
}

std::vector<LVec> ccw_cycle(const LatticeConfiguration& a) { return hull_vertices_2d(a.points); }

std::vector<LVec> primitive_edge_directions(const std::vector<LVec>& cycle) {
    std::vector<LVec> dirs;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const LVec& p = cycle[i];
        const LVec& q = cycle[(i + 1) % cycle.size()];
        long long ex = q[0] - p[0], ey = q[1] - p[1];
        long long g = gcd_ll(ex, ey);
        dirs.push_back({ex / g, ey / g});
        dirs.push_back({-ex / g, -ey / g});
    }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

}  // namespace

InvariantKey invariant_key(const LatticeConfiguration& a) {
    InvariantKey key;
    key.vol = normalized_volume(a);
    PickCounts pc = pick_counts(a);
    key.interior = pc.interior;
    key.boundary = pc.boundary;
    std::vector<LVec> cycle = ccw_cycle(a);
    key.vertex_count = static_cast<long long>(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i) {
        const LVec& p = cycle[i];
        const LVec& q = cycle[(i + 1) % cycle.size()];
        key.edge_lengths.push_back(gcd_ll(q[0] - p[0], q[1] - p[1]));
    }
    std::sort(key.edge_lengths.begin(), key.edge_lengths.end());
    return key;
}

std::pair<LatticeConfiguration, UnimodularMap> canonical_form_with_map(const LatticeConfiguration& a) {
    if (a.d != 2 || dimension(a) != 2)
        throw Error(ErrorKind::DegenerateConfiguration, "canonical form needs a full-dimensional planar configuration");

    PickCounts pc = pick_counts(a);
    LVec center;
    bool centered = false;
    if (pc.interior == 1) {
        // translate the unique interior point to the origin
        LatticePolytope hull = convex_hull(a);
        for (const LVec& p : lattice_points(hull).points) {
            bool on_boundary = false;
            for (const Facet& f : hull.facets) {
                if (f.normal[0] * p[0] + f.normal[1] * p[1] == f.offset) {
                    on_boundary = true;
                    break;
                }
            }
            if (!on_boundary) {
                center = p;
                centered = true;
                break;
            }
        }
    }

    std::vector<LVec> dirs = primitive_edge_directions(ccw_cycle(a));

    std::vector<LVec> best;
    M2 best_u{1, 0, 0, 1};
    LVec best_shift = {0, 0};
    bool first = true;
    for (const LVec& u : dirs) {
        for (const LVec& w : dirs) {
            M2 m{u[0], w[0], u[1], w[1]};  // columns u, w
            if (m.det() == 0) continue;
            M2 t = row_hnf_transform(m);
            std::vector<LVec> image;
            image.reserve(a.points.size());
            for (const LVec& p : a.points) {
                long long x = p[0] - (centered ? center[0] : 0);
                long long y = p[1] - (centered ? center[1] : 0);
                image.push_back({t.a * x + t.b * y, t.c * x + t.d * y});
            }
            LVec shift = {0, 0};
            if (!centered) {
                shift = *std::min_element(image.begin(), image.end());
                for (LVec& p : image) {
                    p[0] -= shift[0];
                    p[1] -= shift[1];
                }
            }
            std::sort(image.begin(), image.end());
            if (first || image < best) {
                best = image;
                best_u = t;
                best_shift = shift;
                first = false;
            }
        }
    }

    LVec translation = {0, 0};
    if (centered) {
        translation = {-(best_u.a * center[0] + best_u.b * center[1]),
                       -(best_u.c * center[0] + best_u.d * center[1])};
    } else {
        translation = {-best_shift[0], -best_shift[1]};
    }
    UnimodularMap map({{best_u.a, best_u.b}, {best_u.c, best_u.d}}, translation);
    return {LatticeConfiguration(2, best), map};
}

LatticeConfiguration canonical_form(const LatticeConfiguration& a) {
    return canonical_form_with_map(a).first;
}

std::pair<bool, std::optional<UnimodularMap>> equivalent(const LatticeConfiguration& a,
                                                         const LatticeConfiguration& b) {
    auto [ca, ma] = canonical_form_with_map(a);
    auto [cb, mb] = canonical_form_with_map(b);
    if (!(ca == cb)) return {false, std::nullopt};
    UnimodularMap witness = mb.inverse().compose(ma);
    if (!(apply_unimodular(a, witness) == b))
        throw Error(ErrorKind::DegenerateInput, "equivalence witness failed verification");
    return {true, witness};
}

std::vector<EquivalenceClass> classify_planar_saturated_chasles(int search_box, int max_vertices) {
    if (search_box < 3 || max_vertices < 6)
        throw Error(ErrorKind::DimensionMismatch, "search box must be >= 3 and vertex bound >= 6");

    std::vector<LVec> grid;
    for (long long x = 0; x <= search_box; ++x)
        for (long long y = 0; y <= search_box; ++y) grid.push_back({x, y});
    const int n = static_cast<int>(grid.size());

    std::map<std::vector<LVec>, EquivalenceClass> classes;

    auto consider = [&](const std::vector<LVec>& subset) {
        std::vector<LVec> cycle;
        try {
            cycle = hull_vertices_2d(subset);
        } catch (const Error&) {
            return;
        }
        if (cycle.size() != subset.size()) return;  // not in convex position
        if (cycle.size() < 3) return;

        // exactly one strictly interior lattice point
        long long lo_x = cycle[0][0], hi_x = cycle[0][0], lo_y = cycle[0][1], hi_y = cycle[0][1];
        for (const LVec& v : cycle) {
            lo_x = std::min(lo_x, v[0]);
            hi_x = std::max(hi_x, v[0]);
            lo_y = std::min(lo_y, v[1]);
            hi_y = std::max(hi_y, v[1]);
        }
        int interior = 0;
        auto side = [&](const LVec& p, size_t i) {
            const LVec& a = cycle[i];
            const LVec& b = cycle[(i + 1) % cycle.size()];
            return (__int128)(b[0] - a[0]) * (p[1] - a[1]) - (__int128)(b[1] - a[1]) * (p[0] - a[0]);
        };
        for (long long x = lo_x; x <= hi_x && interior <= 1; ++x) {
            for (long long y = lo_y; y <= hi_y; ++y) {
                LVec p = {x, y};
                bool strict = true;
                for (size_t i = 0; i < cycle.size(); ++i) {
                    if (side(p, i) <= 0) {
                        strict = false;
                        break;
                    }
                }
                if (strict && ++interior > 1) break;
            }
        }
        if (interior != 1) return;

        LatticeConfiguration sat = lattice_points(convex_hull(LatticeConfiguration(2, subset)));
        ConfigurationReport rep = is_chasles_configuration(sat);
        if (!rep.chasles || !rep.saturated)
            throw Error(ErrorKind::DegenerateConfiguration,
                        "one-interior-point saturated polygon failed the Chasles identity");

        auto [canon, map] = canonical_form_with_map(sat);
        auto it = classes.find(canon.points);
        if (it == classes.end()) {
            EquivalenceClass cls;
            cls.key = invariant_key(canon);
            cls.canonical = canon;
            cls.witness = map;
            classes.emplace(canon.points, std::move(cls));
        }
    };

    std::vector<int> idx;
    std::vector<LVec> subset;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            consider(subset);
            return;
        }
        for (int i = start; i <= n - remaining; ++i) {
            subset.push_back(grid[i]);
            self(self, i + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (int k = 3; k <= max_vertices; ++k) rec(rec, 0, k);

    std::vector<EquivalenceClass> out;
    for (auto& [pts, cls] : classes) out.push_back(std::move(cls));
    return out;
}

}  // namespace chasles
