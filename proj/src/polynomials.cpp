#include "chasles/polynomials.hpp"

#include <algorithm>
#include <numeric>

namespace chasles {

bool grlex_less(const Expo& a, const Expo& b) {
    long long da = std::accumulate(a.begin(), a.end(), 0ll);
    long long db = std::accumulate(b.begin(), b.end(), 0ll);
    if (da != db) return da < db;
    return a < b;
}

LaurentPolynomial LaurentPolynomial::term(int dim, Expo e, Rat c) {
    LaurentPolynomial f(dim);
    if (static_cast<int>(e.size()) != dim)
        throw Error(ErrorKind::DimensionMismatch, "exponent length differs from dimension");
    if (c != 0) f.terms.emplace(std::move(e), std::move(c));
    return f;
}

LaurentPolynomial LaurentPolynomial::constant(int dim, Rat c) {
    return term(dim, Expo(dim, 0), std::move(c));
}

void LaurentPolynomial::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (d != o.d) throw Error(ErrorKind::DimensionMismatch, "polynomial dimensions differ");
    LaurentPolynomial r(*this);
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(d);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (d != o.d) throw Error(ErrorKind::DimensionMismatch, "polynomial dimensions differ");
    LaurentPolynomial r(d);
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : o.terms) {
            Expo e(d);
            for (int i = 0; i < d; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& s) const {
    LaurentPolynomial r(d);
    if (s == 0) return r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, c * s);
    return r;
}

LatticeConfiguration LaurentPolynomial::support() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has empty support");
    std::vector<LVec> pts;
    for (const auto& [e, c] : terms) {
        LVec p(d);
        for (int i = 0; i < d; ++i) p[i] = e[i];
        pts.push_back(std::move(p));
    }
    return LatticeConfiguration(d, std::move(pts));
}

RationalPoint::RationalPoint(std::vector<Rat> c) : coords(std::move(c)) {
    if (coords.empty()) throw Error(ErrorKind::ParseError, "empty point");
    for (const Rat& x : coords) {
        if (x == 0) throw Error(ErrorKind::ZeroBase, "torus point with zero coordinate");
    }
}

namespace {

Rat pow_rat(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) throw Error(ErrorKind::ZeroBase, "negative power of zero");
    Rat b = base;
    long long n = e < 0 ? -e : e;
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

}  // namespace

Rat evaluate_at(const LaurentPolynomial& f, const std::vector<Rat>& coords) {
    if (static_cast<int>(coords.size()) != f.d)
        throw Error(ErrorKind::DimensionMismatch, "point dimension differs from polynomial");
    Rat acc(0);
    for (const auto& [e, c] : f.terms) {
        Rat t = c;
        for (int i = 0; i < f.d; ++i) {
            if (e[i] == 0) continue;
            if (coords[i] == 0) {
                if (e[i] < 0) throw Error(ErrorKind::ZeroBase, "negative power of a zero coordinate");
                t = 0;
                break;
            }
            t *= pow_rat(coords[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

Rat evaluate(const LaurentPolynomial& f, const RationalPoint& p) { return evaluate_at(f, p.coords); }

FaceRestriction restrict_to_face(const LaurentPolynomial& f, const LVec& v) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot restrict the zero polynomial");
    if (static_cast<int>(v.size()) != f.d)
        throw Error(ErrorKind::DimensionMismatch, "weight vector dimension");

    long long min_w = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        long long w = 0;
        for (int i = 0; i < f.d; ++i) w += v[i] * e[i];
        if (first || w < min_w) {
            min_w = w;
            first = false;
        }
    }

    std::vector<LVec> support;
    Expo shift_e;
    for (const auto& [e, c] : f.terms) {
        long long w = 0;
        for (int i = 0; i < f.d; ++i) w += v[i] * e[i];
        if (w != min_w) continue;
        LVec p(f.d);
        for (int i = 0; i < f.d; ++i) p[i] = e[i];
        support.push_back(std::move(p));
        if (shift_e.empty() || e < shift_e) shift_e = e;
    }

    FaceRestriction out;
    out.normal = v;
    out.restricted_support = LatticeConfiguration(f.d, support);
    out.shift = LVec(f.d);
    for (int i = 0; i < f.d; ++i) out.shift[i] = shift_e[i];

    if (f.d == 2) {
        // Coordinate along the primitive rotated generator of v-perp.
        long long gx = -v[1], gy = v[0];
        long long gg = std::gcd(std::abs(gx), std::abs(gy));
        if (gg > 1) {
            gx /= gg;
            gy /= gg;
        }
        LaurentPolynomial edge(1);
        for (const LVec& p : support) {
            long long dx = p[0] - out.shift[0];
            long long dy = p[1] - out.shift[1];
            long long t;
            if (gx != 0) {
                t = dx / gx;
            } else {
                t = dy / gy;
            }
            if (t * gx != dx || t * gy != dy)
                throw Error(ErrorKind::DegenerateInput, "face support not on the v-perp line");
            Expo key(f.d);
            for (int i = 0; i < f.d; ++i) key[i] = static_cast<int>(p[i]);
            edge.add_term(Expo{static_cast<int>(t)}, f.terms.at(key));
        }
        out.edge_poly = std::move(edge);
    }
    return out;
}

namespace {

std::vector<Expo> sorted_monomials_desc(const LatticeConfiguration& entry) {
    std::vector<Expo> monomials;
    for (const LVec& p : entry.points) {
        Expo e(entry.d);
        for (int i = 0; i < entry.d; ++i) e[i] = static_cast<int>(p[i]);
        monomials.push_back(std::move(e));
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const Expo& a, const Expo& b) { return grlex_less(b, a); });
    return monomials;
}

Rat monomial_value(const Expo& e, const std::vector<Rat>& coords) {
    Rat t(1);
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        t *= pow_rat(coords[i], e[i]);
    }
    return t;
}

}  // namespace

std::vector<LaurentPolynomial> vanishing_space(const LatticeConfiguration& entry,
                                               const std::vector<RationalPoint>& points) {
    if (points.size() + 1 > entry.size())
        throw Error(ErrorKind::DegenerateInput,
                    "too many interpolation points for the support size");
    for (size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].coords.size()) != entry.d)
            throw Error(ErrorKind::DimensionMismatch, "point dimension differs from support");
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j])
                throw Error(ErrorKind::DegenerateInput, "interpolation points must be distinct");
        }
    }

    std::vector<Expo> monomials = sorted_monomials_desc(entry);
    if (points.empty()) {
        std::vector<LaurentPolynomial> all;
        for (const Expo& e : monomials) all.push_back(LaurentPolynomial::term(entry.d, e, Rat(1)));
        return all;
    }
    Matrix<Rat> m(points.size(), std::vector<Rat>(monomials.size()));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < monomials.size(); ++j)
            m[i][j] = monomial_value(monomials[j], points[i].coords);

    KernelBasis<Rat> kb = fraction_free_kernel<Rat>(std::move(m));
    if (kb.rank < static_cast<int>(points.size()))
        throw Error(ErrorKind::DegenerateInput,
                    "evaluation matrix rank " + std::to_string(kb.rank) + " below point count " +
                        std::to_string(points.size()),
                    kb.rank);

    std::vector<LaurentPolynomial> basis;
    for (const auto& vec : kb.vectors) {
        LaurentPolynomial f(entry.d);
        for (size_t j = 0; j < monomials.size(); ++j) f.add_term(monomials[j], vec[j]);
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<std::vector<Rat>> exact_nullspace(const Matrix<Rat>& m) {
    if (m.empty()) return {};
    return fraction_free_kernel<Rat>(m).vectors;
}

LaurentPolynomial substitute(const LaurentPolynomial& f,
                             const std::map<int, LaurentPolynomial>& assignments) {
    for (const auto& [var, g] : assignments) {
        if (var < 0 || var >= f.d) throw Error(ErrorKind::DimensionMismatch, "assignment to unknown variable");
        if (g.d != f.d) throw Error(ErrorKind::DimensionMismatch, "assignment dimension differs");
        if (g.is_zero()) throw Error(ErrorKind::NonInvertibleSubstitution, "substituting the zero polynomial");
    }
    auto poly_pow = [&](const LaurentPolynomial& g, long long e) {
        if (e < 0) {
            if (g.terms.size() != 1)
                throw Error(ErrorKind::NonInvertibleSubstitution,
                            "negative power of a non-monomial substitution");
            const auto& [ge, gc] = *g.terms.begin();
            Expo inv(ge.size());
            for (size_t i = 0; i < ge.size(); ++i) inv[i] = -ge[i];
            LaurentPolynomial gi = LaurentPolynomial::term(g.d, std::move(inv), Rat(1) / gc);
            LaurentPolynomial acc = LaurentPolynomial::constant(g.d, Rat(1));
            for (long long k = 0; k < -e; ++k) acc = acc * gi;
            return acc;
        }
        LaurentPolynomial acc = LaurentPolynomial::constant(g.d, Rat(1));
        LaurentPolynomial base = g;
        long long n = e;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    };

    LaurentPolynomial out(f.d);
    for (const auto& [e, c] : f.terms) {
        Expo rest(f.d, 0);
        LaurentPolynomial t = LaurentPolynomial::constant(f.d, c);
        for (int i = 0; i < f.d; ++i) {
            auto it = assignments.find(i);
            if (it == assignments.end()) {
                rest[i] = e[i];
            } else if (e[i] != 0) {
                t = t * poly_pow(it->second, e[i]);
            }
        }
        t = t * LaurentPolynomial::term(f.d, rest, Rat(1));
        out = out + t;
    }
    return out;
}

LaurentPolynomial partial_derivative(const LaurentPolynomial& f, int var) {
    if (var < 0 || var >= f.d) throw Error(ErrorKind::DimensionMismatch, "derivative variable out of range");
    LaurentPolynomial out(f.d);
    for (const auto& [e, c] : f.terms) {
        if (e[var] == 0) continue;
        Expo de = e;
        de[var] -= 1;
        out.add_term(de, c * e[var]);
    }
    return out;
}

LaurentPolynomial swap_xy(const LaurentPolynomial& f) {
    if (f.d != 2) throw Error(ErrorKind::DimensionMismatch, "swap_xy needs a planar polynomial");
    LaurentPolynomial out(2);
    for (const auto& [e, c] : f.terms) out.terms.emplace(Expo{e[1], e[0]}, c);
    return out;
}

ParametricVanishing vanishing_space_parametric(const LatticeConfiguration& entry,
                                               const std::vector<std::vector<PolyQ>>& points) {
    ParametricVanishing out;
    out.monomials = sorted_monomials_desc(entry);

    Matrix<PolyQ> m;
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != entry.d)
            throw Error(ErrorKind::DimensionMismatch, "point dimension differs from support");
        std::vector<PolyQ> row;
        for (const Expo& e : out.monomials) {
            PolyQ val(Rat(1));
            for (int i = 0; i < entry.d; ++i) {
                if (e[i] < 0)
                    throw Error(ErrorKind::NonInvertibleSubstitution,
                                "negative exponent with polynomial coordinates");
                for (int k = 0; k < e[i]; ++k) val = val * pt[i];
            }
            row.push_back(std::move(val));
        }
        m.push_back(std::move(row));
    }

    KernelBasis<PolyQ> kb = fraction_free_kernel<PolyQ>(std::move(m));
    if (kb.rank < static_cast<int>(points.size()))
        throw Error(ErrorKind::DegenerateInput, "parametric evaluation matrix is rank-deficient",
                    kb.rank);
    out.rank = kb.rank;
    out.basis = std::move(kb.vectors);
    return out;
}

std::pair<PolyQ, long long> dense_from_laurent_1d(const LaurentPolynomial& f) {
    if (f.d != 1) throw Error(ErrorKind::DimensionMismatch, "expected a univariate polynomial");
    if (f.is_zero()) return {PolyQ(), 0};
    long long min_e = f.terms.begin()->first[0];
    long long max_e = min_e;
    for (const auto& [e, c] : f.terms) {
        min_e = std::min<long long>(min_e, e[0]);
        max_e = std::max<long long>(max_e, e[0]);
    }
    std::vector<Rat> coeffs(max_e - min_e + 1, Rat(0));
    for (const auto& [e, c] : f.terms) coeffs[e[0] - min_e] = c;
    return {PolyQ(std::move(coeffs)), min_e};
}

PolyQQ dense_yx_from_laurent(const LaurentPolynomial& f) {
    if (f.d != 2) throw Error(ErrorKind::DimensionMismatch, "expected a bivariate polynomial");
    if (f.is_zero()) return PolyQQ();
    int min_x = f.terms.begin()->first[0], min_y = f.terms.begin()->first[1];
    int max_y = min_y;
    for (const auto& [e, c] : f.terms) {
        min_x = std::min(min_x, e[0]);
        min_y = std::min(min_y, e[1]);
        max_y = std::max(max_y, e[1]);
    }
    std::vector<std::vector<Rat>> cols(max_y - min_y + 1);
    for (const auto& [e, c] : f.terms) {
        auto& col = cols[e[1] - min_y];
        size_t xi = static_cast<size_t>(e[0] - min_x);
        if (col.size() <= xi) col.resize(xi + 1, Rat(0));
        col[xi] = c;
    }
    std::vector<PolyQ> out;
    for (auto& col : cols) out.emplace_back(std::move(col));
    return PolyQQ(std::move(out));
}

DensePoly<PolyQQ> dense_3d_from_laurent(const LaurentPolynomial& f, int outer, int mid, int inner) {
    if (f.d != 3) throw Error(ErrorKind::DimensionMismatch, "expected a trivariate polynomial");
    if (f.is_zero()) return DensePoly<PolyQQ>();
    int mins[3], maxs[3];
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        for (int i = 0; i < 3; ++i) {
            if (first || e[i] < mins[i]) mins[i] = e[i];
            if (first || e[i] > maxs[i]) maxs[i] = e[i];
        }
        first = false;
    }
    std::vector<std::vector<std::vector<Rat>>> grid(
        maxs[outer] - mins[outer] + 1,
        std::vector<std::vector<Rat>>(maxs[mid] - mins[mid] + 1,
                                      std::vector<Rat>(maxs[inner] - mins[inner] + 1, Rat(0))));
    for (const auto& [e, c] : f.terms)
        grid[e[outer] - mins[outer]][e[mid] - mins[mid]][e[inner] - mins[inner]] = c;

    std::vector<PolyQQ> outer_coeffs;
    for (auto& mid_grid : grid) {
        std::vector<PolyQ> mid_coeffs;
        for (auto& inner_coeffs : mid_grid) mid_coeffs.emplace_back(std::move(inner_coeffs));
        outer_coeffs.emplace_back(std::move(mid_coeffs));
    }
    return DensePoly<PolyQQ>(std::move(outer_coeffs));
}

}  // namespace chasles
