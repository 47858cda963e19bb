#include "chasles/solver_numeric.hpp"

#include "chasles/resultants.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>

namespace chasles {

namespace {

using cplx = std::complex<double>;

std::vector<double> to_doubles_normalized(const PolyQ& f) {
    Rat scale(0);
    for (const Rat& c : f.coeffs()) {
        Rat a = abs(c);
        if (a > scale) scale = a;
    }
    std::vector<double> out;
    out.reserve(f.coeffs().size());
    for (const Rat& c : f.coeffs()) out.push_back(rat_to_double(c / scale));
    return out;
}

cplx horner(const std::vector<double>& c, cplx x) {
    cplx acc(0.0, 0.0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

double eval_abs(const std::vector<double>& c, double ax) {
    double acc = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * ax + std::abs(c[i]);
    return acc;
}

}  // namespace

std::vector<UnivariateRoot> univariate_roots(const PolyQ& f, const SolverOptions& opts) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root finding on the zero polynomial");
    std::vector<double> c = to_doubles_normalized(f);

    // Roots at zero come from trailing zero coefficients.
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(c.size()) && c[zero_mult] == 0.0) ++zero_mult;
    std::vector<double> cs(c.begin() + zero_mult, c.end());

    std::vector<cplx> raw;
    const int n = static_cast<int>(cs.size()) - 1;
    if (n > 0) {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) companion(i, n - 1) = -cs[i] / cs[n];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
        if (es.info() != Eigen::Success)
            throw Error(ErrorKind::IllConditioned, "eigenvalue computation failed");
        for (int i = 0; i < n; ++i) raw.push_back(es.eigenvalues()(i));

        // Newton polish, accepting only steps that reduce |p|; near multiple
        // roots the raw step can bounce on rounding noise.
        std::vector<double> dc(n);
        for (int i = 1; i <= n; ++i) dc[i - 1] = i * cs[i];
        for (cplx& z : raw) {
            for (int it = 0; it < 4; ++it) {
                cplx fv = horner(cs, z);
                cplx dv = horner(dc, z);
                if (std::abs(dv) < 1e-300) break;
                cplx step = fv / dv;
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
                cplx cand = z - step;
                if (std::abs(horner(cs, cand)) >= std::abs(fv)) break;
                z = cand;
            }
        }
    }

    // Cluster into multiplicities.
    std::vector<UnivariateRoot> out;
    std::vector<bool> taken(raw.size(), false);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (taken[i]) continue;
        cplx sum = raw[i];
        int count = 1;
        taken[i] = true;
        for (size_t j = i + 1; j < raw.size(); ++j) {
            if (taken[j]) continue;
            double scale = std::max(1.0, std::abs(raw[i]));
            if (std::abs(raw[j] - raw[i]) < opts.cluster_tol * scale) {
                sum += raw[j];
                ++count;
                taken[j] = true;
            }
        }
        UnivariateRoot r;
        r.value = sum / static_cast<double>(count);
        r.multiplicity = count;
        double denom = std::max(eval_abs(cs, std::abs(r.value)), 1e-300);
        r.residual = std::abs(horner(cs, r.value)) / denom;
        // Multiple roots flatten the polynomial; relax by the cluster size.
        double allowance = opts.tol;
        for (int k = 1; k < count; ++k) allowance = std::max(allowance, std::pow(opts.tol, 1.0 / (k + 1)));
        if (r.residual > allowance)
            throw Error(ErrorKind::IllConditioned,
                        "root residual " + std::to_string(r.residual) + " above tolerance");
        out.push_back(r);
    }
    if (zero_mult > 0) out.push_back(UnivariateRoot{cplx(0.0, 0.0), zero_mult, 0.0});
    std::sort(out.begin(), out.end(), [](const UnivariateRoot& a, const UnivariateRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

long long TorusRootList::total_multiplicity() const {
    long long acc = 0;
    for (const TorusRoot& r : roots) acc += r.multiplicity;
    return acc;
}

TorusRootList solve_2d(const LaurentPolynomial& f, const LaurentPolynomial& g,
                       const SolverOptions& opts) {
    if (f.d != 2 || g.d != 2) throw Error(ErrorKind::DimensionMismatch, "solve_2d needs planar polynomials");
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial in system");

    PolyQQ fy = dense_yx_from_laurent(f);
    PolyQQ gy = dense_yx_from_laurent(g);
    PolyQ eliminant = sylvester_resultant<PolyQ>(fy, gy);
    if (eliminant.is_zero())
        throw Error(ErrorKind::PositiveDimensional, "eliminant vanishes identically");

    std::vector<UnivariateRoot> xroots = univariate_roots(eliminant, opts);

    // Double-precision coefficient grids for back-substitution.
    auto grid = [](const PolyQQ& p) {
        Rat scale(0);
        for (const PolyQ& col : p.coeffs())
            for (const Rat& c : col.coeffs()) {
                Rat a = abs(c);
                if (a > scale) scale = a;
            }
        std::vector<std::vector<double>> out;
        for (const PolyQ& col : p.coeffs()) {
            std::vector<double> cc;
            for (const Rat& c : col.coeffs()) cc.push_back(rat_to_double(c / scale));
            out.push_back(std::move(cc));
        }
        return out;
    };
    std::vector<std::vector<double>> fg = grid(fy), gg = grid(gy);

    auto eval_sys = [](const std::vector<std::vector<double>>& p, cplx x, cplx y) {
        cplx acc(0.0, 0.0);
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * y + horner(p[i], x);
        return acc;
    };
    auto scale_sys = [](const std::vector<std::vector<double>>& p, double ax, double ay) {
        double acc = 0.0;
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * ay + eval_abs(p[i], ax);
        return std::max(acc, 1e-300);
    };

    std::vector<TorusRoot> found;
    for (const UnivariateRoot& xr : xroots) {
        if (std::abs(xr.value) < 1e-13) continue;  // off the torus
        // y-polynomial of f at x0 (fall back to g when f degenerates there)
        auto y_coeffs = [&](const std::vector<std::vector<double>>& p) {
            std::vector<cplx> yc;
            for (const auto& col : p) yc.push_back(horner(col, xr.value));
            while (!yc.empty() && std::abs(yc.back()) < 1e-13) yc.pop_back();
            return yc;
        };
        std::vector<cplx> yc = y_coeffs(fg);
        if (yc.size() <= 1) yc = y_coeffs(gg);
        if (yc.size() <= 1) continue;  // both collapse; nothing recoverable here

        const int ny = static_cast<int>(yc.size()) - 1;
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(ny, ny);
        for (int i = 1; i < ny; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < ny; ++i) companion(i, ny - 1) = -yc[i] / yc[ny];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
        if (es.info() != Eigen::Success) continue;
        for (int i = 0; i < ny; ++i) {
            cplx y = es.eigenvalues()(i);
            // Newton polish in y, accepting only improving steps.
            for (int it = 0; it < 3; ++it) {
                cplx fv = eval_sys(fg, xr.value, y);
                cplx h(1e-7, 0.0);
                cplx dfy = (eval_sys(fg, xr.value, y + h) - fv) / h;
                if (std::abs(dfy) < 1e-300) break;
                cplx cand = y - fv / dfy;
                if (std::abs(eval_sys(fg, xr.value, cand)) >= std::abs(fv)) break;
                y = cand;
            }
            if (std::abs(y) < 1e-13) continue;
            double rf = std::abs(eval_sys(fg, xr.value, y)) /
                        scale_sys(fg, std::abs(xr.value), std::abs(y));
            double rg = std::abs(eval_sys(gg, xr.value, y)) /
                        scale_sys(gg, std::abs(xr.value), std::abs(y));
            double res = std::max(rf, rg);
            double allowance = std::max(opts.tol, 1e3 * opts.tol * (1.0 + std::abs(y)));
            if (res > allowance) continue;
            found.push_back(TorusRoot{{xr.value, y}, 1, res});
        }
    }

    // Cluster into multiplicities.
    TorusRootList out;
    out.tolerance = opts.tol;
    std::vector<bool> taken(found.size(), false);
    for (size_t i = 0; i < found.size(); ++i) {
        if (taken[i]) continue;
        TorusRoot acc = found[i];
        taken[i] = true;
        int count = 1;
        for (size_t j = i + 1; j < found.size(); ++j) {
            if (taken[j]) continue;
            double dx = std::abs(found[j].coords[0] - found[i].coords[0]);
            double dy = std::abs(found[j].coords[1] - found[i].coords[1]);
            double sx = std::max(1.0, std::abs(found[i].coords[0]));
            double sy = std::max(1.0, std::abs(found[i].coords[1]));
            if (dx < opts.cluster_tol * sx && dy < opts.cluster_tol * sy) {
                taken[j] = true;
                ++count;
                acc.residual = std::max(acc.residual, found[j].residual);
            }
        }
        acc.multiplicity = count;
        out.roots.push_back(acc);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const TorusRoot& a, const TorusRoot& b) {
        auto key = [](const TorusRoot& r) {
            return std::make_tuple(r.coords[0].real(), r.coords[0].imag(), r.coords[1].real(),
                                   r.coords[1].imag());
        };
        return key(a) < key(b);
    });
    return out;
}

CountStatistics count_torus_roots(const std::vector<LatticeConfiguration>& configs,
                                  const std::vector<int>& multiplicities, long long trials,
                                  std::uint64_t seed, const SolverOptions& opts) {
    if (configs.size() != multiplicities.size() || configs.empty())
        throw Error(ErrorKind::DimensionMismatch, "configs and multiplicities must align");
    int total = 0;
    for (int m : multiplicities) total += m;
    if (total != 2 || configs.front().d != 2)
        throw Error(ErrorKind::DimensionMismatch, "root counting is implemented for d = 2");

    std::vector<std::pair<LatticeConfiguration, int>> entries;
    for (size_t i = 0; i < configs.size(); ++i) entries.emplace_back(configs[i], multiplicities[i]);

    CountStatistics stats;
    stats.expected = mixed_volume(entries);
    stats.seed = seed;
    stats.trials = trials;

    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        std::vector<LaurentPolynomial> polys;
        for (size_t i = 0; i < configs.size(); ++i)
            for (int k = 0; k < multiplicities[i]; ++k)
                polys.push_back(random_polynomial(rng, configs[i], stats.coefficient_bound));
        try {
            TorusRootList roots = solve_2d(polys[0], polys[1], opts);
            long long count = roots.total_multiplicity();
            ++stats.histogram[count];
            if (count == stats.expected)
                ++stats.matching;
            else
                ++stats.mismatched;
        } catch (const Error&) {
            ++stats.flagged;
        }
    }
    return stats;
}

}  // namespace chasles
