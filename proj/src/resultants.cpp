#include "chasles/resultants.hpp"

#include <algorithm>
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

// Shifts each support to minimum 0 and returns it sorted.
std::vector<long long> shifted(const std::vector<long long>& s) {
    std::vector<long long> out = s;
    std::sort(out.begin(), out.end());
    long long lo = out.front();
    for (long long& e : out) e -= lo;
    return out;
}

long long joint_content(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long g = 0;
    for (long long e : a) g = gcd_ll(g, e);
    for (long long e : b) g = gcd_ll(g, e);
    return g;
}

Rat rat_pow(const Rat& base, long long e) {
    Rat acc(1);
    Rat b = base;
    long long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

}  // namespace

long long mu_exponent_1d(const std::vector<std::vector<long long>>& supports) {
    if (supports.size() != 2)
        throw Error(ErrorKind::DimensionMismatch, "1-D facial systems consist of two supports");
    std::vector<long long> a = shifted(supports[0]);
    std::vector<long long> b = shifted(supports[1]);
    const bool a_point = a.back() == 0;
    const bool b_point = b.back() == 0;
    if (a_point && b_point)
        throw Error(ErrorKind::NotEssential, "two single-point supports have no essential subset");
    if (a_point) return b.back();  // lattice length of conv(b)
    if (b_point) return a.back();
    return joint_content(a, b);
}

DirectionalResultantRecord directional_resultant(const LaurentPolynomial& f,
                                                 const LaurentPolynomial& g, const LVec& v) {
    if (f.d != 2 || g.d != 2)
        throw Error(ErrorKind::DimensionMismatch, "directional resultants are implemented for d = 2");

    FaceRestriction rf = restrict_to_face(f, v);
    FaceRestriction rg = restrict_to_face(g, v);
    auto [pf, sf] = dense_from_laurent_1d(rf.edge_poly);
    auto [pg, sg] = dense_from_laurent_1d(rg.edge_poly);

    DirectionalResultantRecord rec;
    rec.normal = v;

    if (pf.deg() == 0 && pg.deg() == 0) {
        rec.value = 1;  // vertex-vertex face; the resultant family is not essential
        return rec;
    }

    std::vector<long long> sup_f, sup_g;
    for (int i = 0; i <= pf.deg(); ++i)
        if (pf.coeff(i) != 0) sup_f.push_back(i);
    for (int i = 0; i <= pg.deg(); ++i)
        if (pg.coeff(i) != 0) sup_g.push_back(i);

    const long long content = joint_content(sup_f, sup_g);
    PolyQ red_f, red_g;
    {
        std::vector<Rat> cf(pf.deg() / content + 1, Rat(0)), cg(pg.deg() / content + 1, Rat(0));
        for (long long e : sup_f) cf[e / content] = pf.coeff(static_cast<int>(e));
        for (long long e : sup_g) cg[e / content] = pg.coeff(static_cast<int>(e));
        red_f = PolyQ(std::move(cf));
        red_g = PolyQ(std::move(cg));
    }

    Rat res = sylvester_resultant<Rat>(red_f, red_g);
    if (res == 0)
        throw Error(ErrorKind::FaceSystemDegenerate,
                    "face system shares a root; directional resultant vanishes");

    rec.mu = mu_exponent_1d({sup_f, sup_g});
    rec.lattice_index = (pf.deg() > 0 && pg.deg() > 0) ? content : 1;
    rec.value = rat_pow(res, content);
    return rec;
}

CoordinateProduct product_of_coordinates(const std::vector<LaurentPolynomial>& polys, int i) {
    if (polys.size() != 2)
        throw Error(ErrorKind::DimensionMismatch, "the planar product formula takes two polynomials");
    if (i < 0 || i > 1) throw Error(ErrorKind::DimensionMismatch, "coordinate index out of range");
    const LaurentPolynomial& f = polys[0];
    const LaurentPolynomial& g = polys[1];

    LatticePolytope sum = minkowski_sum(convex_hull(f.support()), convex_hull(g.support()));
    if (sum.degenerate)
        throw Error(ErrorKind::FaceSystemDegenerate,
                    "Minkowski sum of the Newton polytopes is lower-dimensional");

    CoordinateProduct out;
    out.value = 1;
    for (const LVec& v : facet_normals(sum)) {
        DirectionalResultantRecord rec = directional_resultant(f, g, v);
        const long long e = v[i];
        if (e != 0) out.value *= rat_pow(rec.value, e);
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace chasles
