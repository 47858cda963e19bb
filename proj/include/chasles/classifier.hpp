#ifndef CHASLES_CLASSIFIER_HPP
#define CHASLES_CLASSIFIER_HPP

#include "chasles/lattice_geometry.hpp"

#include <optional>
#include <vector>

namespace chasles {

struct InvariantKey {
    long long vol = 0;
    long long interior = 0;
    long long boundary = 0;
    long long vertex_count = 0;
    std::vector<long long> edge_lengths;  // sorted lattice lengths

    bool operator==(const InvariantKey& o) const {
        return vol == o.vol && interior == o.interior && boundary == o.boundary &&
               vertex_count == o.vertex_count && edge_lengths == o.edge_lengths;
    }
};

InvariantKey invariant_key(const LatticeConfiguration& a);

struct EquivalenceClass {
    LatticeConfiguration canonical;
    InvariantKey key;
    std::optional<UnimodularMap> witness;  // map from a member onto the canonical form
};

/// Deterministic representative of a planar configuration under affine
/// unimodular equivalence. The unique interior point (when there is exactly
/// one) is translated to the origin, candidate linear maps are generated from
/// ordered pairs of primitive edge directions of the hull via their Hermite
/// normal form, and the lexicographically smallest image is kept.
LatticeConfiguration canonical_form(const LatticeConfiguration& a);

/// Canonical form plus the map that realizes it.
std::pair<LatticeConfiguration, UnimodularMap> canonical_form_with_map(const LatticeConfiguration& a);

/// Equality of canonical forms; on success the witness sends a onto b and is
/// verified by apply_unimodular.
std::pair<bool, std::optional<UnimodularMap>> equivalent(const LatticeConfiguration& a,
                                                         const LatticeConfiguration& b);

/// Enumerates saturated planar configurations whose hull has exactly one
/// interior lattice point, searching vertex subsets of [0, search_box]^2 in
/// convex position, deduplicated by canonical form.
std::vector<EquivalenceClass> classify_planar_saturated_chasles(int search_box = 4,
                                                                int max_vertices = 6);

}  // namespace chasles

#endif
