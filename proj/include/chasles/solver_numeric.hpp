#ifndef CHASLES_SOLVER_NUMERIC_HPP
#define CHASLES_SOLVER_NUMERIC_HPP

#include "chasles/lattice_geometry.hpp"
#include "chasles/polynomials.hpp"
#include "chasles/univariate.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace chasles {

struct SolverOptions {
    double tol = 1e-10;          // residual acceptance threshold
    double cluster_tol = 1e-7;   // relative clustering radius for multiplicities
};

struct UnivariateRoot {
    std::complex<double> value;
    int multiplicity = 1;
    double residual = 0.0;
};

/// All complex roots of f via a companion-matrix eigenvalue computation with
/// Newton polishing; roots within cluster_tol are merged into multiplicities.
/// Throws IllConditioned when a residual exceeds tol.
std::vector<UnivariateRoot> univariate_roots(const PolyQ& f, const SolverOptions& opts = {});

struct TorusRoot {
    std::vector<std::complex<double>> coords;
    int multiplicity = 1;
    double residual = 0.0;
};

struct TorusRootList {
    std::vector<TorusRoot> roots;
    double tolerance = 0.0;
    long long total_multiplicity() const;
};

/// Common torus roots of a planar system by resultant elimination and
/// back-substitution. Throws PositiveDimensional when the eliminant vanishes
/// identically, IllConditioned on residual failures.
TorusRootList solve_2d(const LaurentPolynomial& f, const LaurentPolynomial& g,
                       const SolverOptions& opts = {});

struct CountStatistics {
    long long expected = 0;        // mixed volume of the support family
    long long trials = 0;
    long long matching = 0;        // non-flagged trials with the expected count
    long long mismatched = 0;      // non-flagged trials with a different count
    long long flagged = 0;         // degenerate or ill-conditioned draws
    std::map<long long, long long> histogram;
    std::uint64_t seed = 0;
    long long coefficient_bound = 10000;
};

/// Draws random integer coefficients (nonzero, uniform in
/// [-coefficient_bound, coefficient_bound]) on the given supports, solves,
/// and tallies torus-root counts against the mixed volume.
CountStatistics count_torus_roots(const std::vector<LatticeConfiguration>& configs,
                                  const std::vector<int>& multiplicities, long long trials,
                                  std::uint64_t seed, const SolverOptions& opts = {});

/// Random polynomial with full support on a configuration.
template <class Rng>
LaurentPolynomial random_polynomial(Rng& rng, const LatticeConfiguration& support,
                                    long long coefficient_bound) {
    LaurentPolynomial f(support.d);
    for (const LVec& p : support.points) {
        Expo e(support.d);
        for (int i = 0; i < support.d; ++i) e[i] = static_cast<int>(p[i]);
        f.add_term(e, Rat(uniform_nonzero(rng, coefficient_bound)));
    }
    return f;
}

}  // namespace chasles

#endif
