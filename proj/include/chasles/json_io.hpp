#ifndef CHASLES_JSON_IO_HPP
#define CHASLES_JSON_IO_HPP

#include "chasles/chasles_core.hpp"
#include "chasles/classifier.hpp"
#include "chasles/lattice_geometry.hpp"
#include "chasles/polynomials.hpp"
#include "chasles/solver_numeric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace chasles {

using Json = nlohmann::json;

// {"d": int, "points": [[int,...],...]}
Json to_json(const LatticeConfiguration& a);
LatticeConfiguration configuration_from_json(const Json& j);

// {"d": int, "dim": int, "degenerate": bool, "vertices": [...], "facets":
//  [{"normal": [...], "offset": int}, ...]}
Json to_json(const LatticePolytope& p);

// {"d": int, "terms": [{"exp": [int,...], "coeff": "p/q"}, ...]}
Json to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const Json& j);

// ["p/q", ...]
Json to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);
std::vector<RationalPoint> points_from_json(const Json& j);

// {"configurations": [...], "partition": [int,...]}
Json to_json(const ChaslesStructure& s);
ChaslesStructure structure_from_json(const Json& j);

Json to_json(const DirectionalResultantRecord& r);
Json to_json(const ExtraPointResult& r);
Json to_json(const TorusRootList& roots);
Json to_json(const EquivalenceClass& cls);
Json to_json(const CountStatistics& stats);

/// Parses text, mapping malformed inputs to Error{ParseError}.
Json parse_json(const std::string& text);

std::string read_input(const std::string& path_or_dash);  // "-" reads stdin

}  // namespace chasles

#endif
