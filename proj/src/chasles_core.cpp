#include "chasles/chasles_core.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <optional>

namespace chasles {

namespace {

using cplx = std::complex<double>;

std::vector<LaurentPolynomial> flatten_bases(const std::vector<std::vector<LaurentPolynomial>>& bases) {
    std::vector<LaurentPolynomial> polys;
    for (const auto& b : bases) polys.insert(polys.end(), b.begin(), b.end());
    return polys;
}

std::optional<std::vector<Rat>> certify(const std::vector<LaurentPolynomial>& polys,
                                        const std::vector<Rat>& coords) {
    std::vector<Rat> values;
    for (const LaurentPolynomial& f : polys) {
        Rat v = evaluate_at(f, coords);
        if (v != 0) return std::nullopt;
        values.push_back(std::move(v));
    }
    return values;
}

bool equals_any_input(const std::vector<Rat>& coords, const std::vector<RationalPoint>& points) {
    for (const RationalPoint& p : points) {
        if (p.coords == coords) return true;
    }
    return false;
}

// f = x^k * rest with rest(0) != 0
std::pair<PolyQ, int> strip_zero_roots(const PolyQ& f) {
    int k = 0;
    while (k <= f.deg() && f.coeff(k) == 0) ++k;
    std::vector<Rat> rest(f.coeffs().begin() + k, f.coeffs().end());
    return {PolyQ(std::move(rest)), k};
}

// Exact rational roots of f, recovered from numeric approximations by exact
// Newton refinement and continued-fraction rounding, then verified exactly.
std::vector<Rat> rational_roots(const PolyQ& f) {
    std::vector<Rat> out;
    if (f.deg() <= 0) return out;
    if (f.deg() == 1) {
        out.push_back(-f.coeff(0) / f.coeff(1));
        return out;
    }

    SolverOptions loose;
    loose.tol = 1.0;  // raw candidates; every acceptance is re-verified exactly
    loose.cluster_tol = 1e-9;
    std::vector<UnivariateRoot> roots;
    try {
        roots = univariate_roots(f, loose);
    } catch (const Error&) {
        return out;
    }

    PolyQ df = f.derivative();
    const Int newton_bound = pow(Int(10), 80);
    const std::vector<Int> accept_bounds = {pow(Int(10), 6), pow(Int(10), 15), pow(Int(10), 30),
                                            pow(Int(10), 60)};
    for (const UnivariateRoot& r : roots) {
        double scale = std::max(1.0, std::abs(r.value));
        if (!std::isfinite(r.value.real()) || std::abs(r.value.imag()) > 1e-6 * scale) continue;
        Rat x = rationalize(Rat(r.value.real()), newton_bound);
        bool done = false;
        for (int it = 0; it < 10 && !done; ++it) {
            for (const Int& b : accept_bounds) {
                Rat cand = rationalize(x, b);
                if (f.eval(cand) == 0) {
                    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
                    done = true;
                    break;
                }
            }
            if (done) break;
            Rat fv = f.eval(x);
            Rat dv = df.eval(x);
            if (dv == 0) break;
            x = rationalize(x - fv / dv, newton_bound);
        }
    }
    return out;
}

std::vector<Rat> eliminant_candidates(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                      const std::vector<RationalPoint>& points, int coord) {
    LaurentPolynomial a = coord == 0 ? f : swap_xy(f);
    LaurentPolynomial b = coord == 0 ? g : swap_xy(g);
    PolyQ elim = sylvester_resultant<PolyQ>(dense_yx_from_laurent(a), dense_yx_from_laurent(b));
    if (elim.is_zero())
        throw Error(ErrorKind::PositiveDimensional, "eliminant vanishes identically");
    PolyQ rest = strip_zero_roots(elim).first;
    for (const RationalPoint& p : points) {
        PolyQ lin(std::vector<Rat>{-p.coords[coord], Rat(1)});
        auto [q, r] = poly_divmod(rest, lin);
        if (!r.is_zero())
            throw Error(ErrorKind::ExtraneousFactorAmbiguity,
                        "eliminant does not vanish at a known coordinate");
        rest = q;
    }
    return rational_roots(rest);
}

std::vector<cplx> roots_of_complex_poly(std::vector<cplx> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<cplx> out;
    if (n <= 0) return out;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
    if (es.info() != Eigen::Success) return out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

cplx eval_polyq_c(const PolyQ& p, cplx x) {
    cplx acc(0.0, 0.0);
    for (int i = p.deg(); i >= 0; --i) acc = acc * x + cplx(rat_to_double(p.coeff(i)), 0.0);
    return acc;
}

cplx eval_laurent_complex(const LaurentPolynomial& f, const std::vector<cplx>& coords) {
    cplx acc(0.0, 0.0);
    for (const auto& [e, c] : f.terms) {
        cplx t(rat_to_double(c), 0.0);
        for (int i = 0; i < f.d; ++i) {
            if (e[i] == 0) continue;
            t *= std::pow(coords[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

double laurent_scale(const LaurentPolynomial& f, const std::vector<cplx>& coords) {
    double acc = 0.0;
    for (const auto& [e, c] : f.terms) {
        double t = std::abs(rat_to_double(c));
        for (int i = 0; i < f.d; ++i) {
            if (e[i] == 0) continue;
            t *= std::pow(std::abs(coords[i]), e[i]);
        }
        acc += t;
    }
    return std::max(acc, 1e-300);
}

LaurentPolynomial laurent_from_yx(const PolyQQ& p) {
    LaurentPolynomial out(2);
    for (int j = 0; j <= p.deg(); ++j) {
        const PolyQ& col = p.coeff(j);
        for (int i = 0; i <= col.deg(); ++i) out.add_term(Expo{i, j}, col.coeff(i));
    }
    return out;
}

std::vector<Rat> solve_linear_rat(Matrix<Rat> a, std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i) {
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw Error(ErrorKind::DegenerateInput, "singular Jacobian");
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat fct = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= fct * a[c][j];
            b[i] -= fct * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

ExtraPointResult build_result(const std::vector<LaurentPolynomial>& polys,
                              const std::vector<RationalPoint>& points, std::vector<Rat> coords,
                              std::vector<int> sign_pattern,
                              std::vector<DirectionalResultantRecord> diagnostics) {
    auto cert = certify(polys, coords);
    if (!cert)
        throw Error(ErrorKind::SignResolutionFailure, "certificate failed on the resolved point");
    ExtraPointResult out{RationalPoint(coords), std::move(*cert), std::move(sign_pattern),
                         std::move(diagnostics), !equals_any_input(coords, points)};
    if (!out.distinct_from_inputs)
        throw Error(ErrorKind::SignResolutionFailure,
                    "extra point coincides with an input point (multiplicity above one)");
    return out;
}

ExtraPointResult extra_point_3d(const std::vector<RationalPoint>& points, const SolverOptions& opts,
                                const std::vector<LaurentPolynomial>& polys) {
    auto dz = [](const LaurentPolynomial& f) { return dense_3d_from_laurent(f, 2, 1, 0); };

    PolyQQ r1 = sylvester_resultant<PolyQQ>(dz(polys[0]), dz(polys[1]));
    PolyQQ r2 = sylvester_resultant<PolyQQ>(dz(polys[0]), dz(polys[2]));
    if (r1.is_zero() || r2.is_zero()) {
        r1 = sylvester_resultant<PolyQQ>(dz(polys[1]), dz(polys[2]));
        r2 = sylvester_resultant<PolyQQ>(dz(polys[0]), dz(polys[2]));
        if (r1.is_zero() || r2.is_zero())
            throw Error(ErrorKind::PositiveDimensional, "iterated eliminants vanish identically");
    }

    SolverOptions plane_opts = opts;
    plane_opts.tol = std::max(opts.tol, 1e-7);
    TorusRootList xy = solve_2d(laurent_from_yx(r1), laurent_from_yx(r2), plane_opts);

    std::vector<std::vector<cplx>> numeric_inputs;
    for (const RationalPoint& p : points) {
        std::vector<cplx> c;
        for (const Rat& v : p.coords) c.emplace_back(rat_to_double(v), 0.0);
        numeric_inputs.push_back(std::move(c));
    }

    std::vector<std::pair<double, std::vector<cplx>>> candidates;  // residual, coords
    for (const TorusRoot& root : xy.roots) {
        // z-coordinates from the first polynomial that stays genuinely
        // univariate at (x0, y0).
        std::vector<cplx> zs;
        for (const LaurentPolynomial& f : polys) {
            DensePoly<PolyQQ> fz = dense_3d_from_laurent(f, 2, 1, 0);
            std::vector<cplx> zc;
            for (int i = 0; i <= fz.deg(); ++i) {
                const PolyQQ& ci = fz.coeff(i);
                cplx acc(0.0, 0.0);
                for (int j = ci.deg(); j >= 0; --j)
                    acc = acc * root.coords[1] + eval_polyq_c(ci.coeff(j), root.coords[0]);
                zc.push_back(acc);
            }
            zs = roots_of_complex_poly(zc);
            if (!zs.empty()) break;
        }
        for (const cplx& z : zs) {
            if (std::abs(z) < 1e-12) continue;
            std::vector<cplx> coords = {root.coords[0], root.coords[1], z};
            double res = 0.0;
            for (const LaurentPolynomial& f : polys)
                res = std::max(res, std::abs(eval_laurent_complex(f, coords)) / laurent_scale(f, coords));
            if (res > 1e-5) continue;
            bool matches_input = false;
            for (const auto& inp : numeric_inputs) {
                double dist = 0.0;
                for (int i = 0; i < 3; ++i)
                    dist = std::max(dist, std::abs(coords[i] - inp[i]) /
                                              std::max(1.0, std::abs(inp[i])));
                if (dist < 1e-5) {
                    matches_input = true;
                    break;
                }
            }
            if (!matches_input) candidates.emplace_back(res, coords);
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<LaurentPolynomial> jac;
    for (const LaurentPolynomial& f : polys)
        for (int j = 0; j < 3; ++j) jac.push_back(partial_derivative(f, j));

    const Int newton_bound = pow(Int(10), 120);
    const std::vector<Int> accept_bounds = {pow(Int(10), 8), pow(Int(10), 20), pow(Int(10), 40),
                                            pow(Int(10), 80)};
    for (const auto& [res, approx] : candidates) {
        bool real_enough = true;
        for (const cplx& c : approx) {
            if (std::abs(c.imag()) > 1e-4 * std::max(1.0, std::abs(c))) real_enough = false;
        }
        if (!real_enough) continue;

        std::vector<Rat> p(3);
        for (int i = 0; i < 3; ++i) p[i] = rationalize(Rat(approx[i].real()), newton_bound);
        for (int it = 0; it < 14; ++it) {
            for (const Int& b : accept_bounds) {
                std::vector<Rat> cand(3);
                bool nonzero = true;
                for (int i = 0; i < 3; ++i) {
                    cand[i] = rationalize(p[i], b);
                    if (cand[i] == 0) nonzero = false;
                }
                if (!nonzero) continue;
                if (auto cert = certify(polys, cand)) {
                    if (!equals_any_input(cand, points))
                        return build_result(polys, points, cand, {}, {});
                }
            }
            // Exact Newton step with continued-fraction truncation.
            Matrix<Rat> jm(3, std::vector<Rat>(3));
            std::vector<Rat> fv(3);
            for (int i = 0; i < 3; ++i) {
                fv[i] = evaluate_at(polys[i], p);
                for (int j = 0; j < 3; ++j) jm[i][j] = evaluate_at(jac[i * 3 + j], p);
            }
            std::vector<Rat> delta;
            try {
                delta = solve_linear_rat(jm, fv);
            } catch (const Error&) {
                break;
            }
            for (int i = 0; i < 3; ++i) p[i] = rationalize(p[i] - delta[i], newton_bound);
        }
    }
    throw Error(ErrorKind::RationalReconstructionFailure,
                "could not certify a rational extra point from the numeric solve");
}

}  // namespace

ConfigurationReport is_chasles_configuration(const LatticeConfiguration& a) {
    if (dimension(a) != a.d)
        throw Error(ErrorKind::DegenerateConfiguration, "configuration is not full-dimensional");
    ConfigurationReport r;
    r.vol = normalized_volume(a);
    r.N = r.vol - 1;
    r.saturated = is_saturated(a);
    r.chasles = static_cast<long long>(a.size()) + 1 == r.vol + a.d;
    return r;
}

StructureReport is_chasles_structure(const std::vector<LatticeConfiguration>& configs,
                                     const std::vector<int>& partition) {
    if (configs.empty() || configs.size() != partition.size())
        throw Error(ErrorKind::DimensionMismatch, "configurations and partition must align");
    const int d = configs.front().d;
    int total = 0;
    for (size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].d != d)
            throw Error(ErrorKind::DimensionMismatch, "configurations in different ambient dimensions");
        if (partition[i] <= 0) throw Error(ErrorKind::DimensionMismatch, "partition entries must be positive");
        total += partition[i];
    }
    if (total != d) throw Error(ErrorKind::DimensionMismatch, "partition must sum to the ambient dimension");

    StructureReport r;
    long long n0 = static_cast<long long>(configs[0].size()) - partition[0];
    for (size_t i = 0; i < configs.size(); ++i) {
        long long ni = static_cast<long long>(configs[i].size()) - partition[i];
        if (ni != n0) {
            r.reason = "|A_i| - k_i differ across entries";
            return r;
        }
    }
    if (n0 < 1) {
        r.reason = "derived N below 1";
        return r;
    }
    r.N = n0;
    std::vector<std::pair<LatticeConfiguration, int>> entries;
    for (size_t i = 0; i < configs.size(); ++i) entries.emplace_back(configs[i], partition[i]);
    r.mixed_vol = mixed_volume(entries);
    r.chasles = (r.mixed_vol == r.N + 1);
    if (!r.chasles) r.reason = "mixed volume differs from N + 1";
    return r;
}

ChaslesStructure ChaslesStructure::create(std::vector<LatticeConfiguration> configs,
                                          std::vector<int> partition) {
    StructureReport r = is_chasles_structure(configs, partition);
    if (!r.chasles)
        throw Error(ErrorKind::DegenerateConfiguration, "not a Chasles structure: " + r.reason);
    ChaslesStructure s;
    s.d = configs.front().d;
    s.N = r.N;
    s.configurations = std::move(configs);
    s.partition = std::move(partition);
    return s;
}

std::vector<std::vector<LaurentPolynomial>> structure_bases(
    const ChaslesStructure& s, const std::vector<RationalPoint>& points) {
    if (static_cast<long long>(points.size()) != s.N)
        throw Error(ErrorKind::DegenerateInput, "expected exactly N interpolation points");
    std::vector<std::vector<LaurentPolynomial>> bases;
    for (size_t i = 0; i < s.configurations.size(); ++i) {
        std::vector<LaurentPolynomial> b = vanishing_space(s.configurations[i], points);
        if (static_cast<int>(b.size()) != s.partition[i])
            throw Error(ErrorKind::DegenerateInput,
                        "vanishing space dimension differs from the partition entry",
                        static_cast<long long>(b.size()));
        bases.push_back(std::move(b));
    }
    return bases;
}

ExtraPointResult extra_point(const ChaslesStructure& s, const std::vector<RationalPoint>& points) {
    if (s.d != 2)
        throw Error(ErrorKind::DimensionMismatch,
                    "the directional-resultant path is implemented for d = 2");
    std::vector<LaurentPolynomial> polys = flatten_bases(structure_bases(s, points));

    CoordinateProduct px = product_of_coordinates(polys, 0);
    CoordinateProduct py = product_of_coordinates(polys, 1);

    Rat mx = abs(px.value);
    Rat my = abs(py.value);
    for (const RationalPoint& p : points) {
        mx /= abs(p.coords[0]);
        my /= abs(p.coords[1]);
    }

    std::vector<std::pair<std::vector<Rat>, std::vector<int>>> passing;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            std::vector<Rat> coords = {sx > 0 ? mx : -mx, sy > 0 ? my : -my};
            if (certify(polys, coords)) passing.push_back({coords, {sx, sy}});
        }
    }
    if (passing.size() != 1)
        throw Error(ErrorKind::SignResolutionFailure,
                    std::to_string(passing.size()) +
                        " signed candidates vanish on the basis (non-generic input or multiplicity)");
    return build_result(polys, points, passing[0].first, passing[0].second, std::move(px.records));
}

ExtraPointResult extra_point_via_eliminant(const ChaslesStructure& s,
                                           const std::vector<RationalPoint>& points,
                                           const SolverOptions& opts) {
    std::vector<LaurentPolynomial> polys = flatten_bases(structure_bases(s, points));
    if (s.d == 3) return extra_point_3d(points, opts, polys);
    if (s.d != 2)
        throw Error(ErrorKind::DimensionMismatch, "eliminant path supports d = 2 and d = 3");

    std::vector<Rat> xs = eliminant_candidates(polys[0], polys[1], points, 0);
    std::vector<Rat> ys = eliminant_candidates(polys[0], polys[1], points, 1);

    std::vector<std::vector<Rat>> passing;
    for (const Rat& x : xs) {
        if (x == 0) continue;
        for (const Rat& y : ys) {
            if (y == 0) continue;
            std::vector<Rat> coords = {x, y};
            if (equals_any_input(coords, points)) continue;
            if (certify(polys, coords)) passing.push_back(coords);
        }
    }
    if (passing.size() != 1)
        throw Error(ErrorKind::ExtraneousFactorAmbiguity,
                    std::to_string(passing.size()) +
                        " certified candidates after deflating the eliminant");
    return build_result(polys, points, passing[0], {}, {});
}

ChaslesStructure family_pq(int n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "family index must be positive");
    auto quad = [](std::vector<LVec> verts) {
        return lattice_points(convex_hull(LatticeConfiguration(2, std::move(verts))));
    };
    LatticeConfiguration p = quad({{0, 0}, {0, n}, {1, n + 1}, {1, 1}});
    LatticeConfiguration q = quad({{1, 0}, {0, 1}, {0, n + 1}, {1, n}});
    return ChaslesStructure::create({p, q}, {1, 1});
}

}  // namespace chasles
