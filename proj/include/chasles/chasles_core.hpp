#ifndef CHASLES_CORE_HPP
#define CHASLES_CORE_HPP

#include "chasles/lattice_geometry.hpp"
#include "chasles/polynomials.hpp"
#include "chasles/resultants.hpp"
#include "chasles/solver_numeric.hpp"

#include <string>
#include <vector>

namespace chasles {

struct ConfigurationReport {
    bool chasles = false;
    long long N = 0;  // vol - 1
    long long vol = 0;
    bool saturated = false;
};

/// Tests |A| + 1 = vol(A) + d on a full-dimensional configuration.
ConfigurationReport is_chasles_configuration(const LatticeConfiguration& a);

struct StructureReport {
    bool chasles = false;
    long long N = 0;
    long long mixed_vol = 0;
    std::string reason;
};

/// Tests the mixed-volume identity mvol(...) = N + 1 for configurations
/// A_1..A_l with |A_i| = N + k_i and a partition d = k_1 + ... + k_l.
StructureReport is_chasles_structure(const std::vector<LatticeConfiguration>& configs,
                                     const std::vector<int>& partition);

struct ChaslesStructure {
    std::vector<LatticeConfiguration> configurations;
    std::vector<int> partition;
    int d = 0;
    long long N = 0;

    /// Validates the defining identities; throws DegenerateConfiguration.
    static ChaslesStructure create(std::vector<LatticeConfiguration> configs,
                                   std::vector<int> partition);
};

struct ExtraPointResult {
    RationalPoint point;
    std::vector<Rat> certificates;  // exact evaluations of the basis, all zero
    std::vector<int> sign_pattern;  // resolved sign per coordinate (d = 2 path)
    std::vector<DirectionalResultantRecord> diagnostics;
    bool distinct_from_inputs = false;
};

/// Polynomial bases induced by the structure at the given points: for each
/// configuration A_i, the k_i-dimensional vanishing space.
std::vector<std::vector<LaurentPolynomial>> structure_bases(
    const ChaslesStructure& s, const std::vector<RationalPoint>& points);

/// The extra common zero of the induced system, for d = 2, via the
/// directional-resultant product formula. Coordinate magnitudes come from the
/// product of roots divided by the known points; the <= 2^d signed candidates
/// are decided by exact vanishing certificates.
ExtraPointResult extra_point(const ChaslesStructure& s, const std::vector<RationalPoint>& points);

/// Same map through elimination: d = 2 exactly (eliminant deflated by the
/// known coordinates), d = 3 with a numeric solve, exact Newton refinement,
/// continued-fraction rationalization, and an exact certificate.
ExtraPointResult extra_point_via_eliminant(const ChaslesStructure& s,
                                           const std::vector<RationalPoint>& points,
                                           const SolverOptions& opts = {});

/// The quadrangle pair P_n, Q_n: lattice points of (0,0),(0,n),(1,n+1),(1,1)
/// and of (1,0),(0,1),(0,n+1),(1,n), with partition (1,1).
ChaslesStructure family_pq(int n);

}  // namespace chasles

#endif
