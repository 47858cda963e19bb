#include "chasles/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace chasles {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::ParseError, what);
}

}  // namespace

Json to_json(const LatticeConfiguration& a) {
    Json j;
    j["d"] = a.d;
    j["points"] = Json::array();
    for (const LVec& p : a.points) j["points"].push_back(p);
    return j;
}

LatticeConfiguration configuration_from_json(const Json& j) {
    require(j.is_object() && j.contains("d") && j.contains("points"),
            "configuration needs fields 'd' and 'points'");
    require(j["d"].is_number_integer(), "'d' must be an integer");
    require(j["points"].is_array() && !j["points"].empty(), "'points' must be a nonempty array");
    int d = j["d"].get<int>();
    std::vector<LVec> pts;
    for (const Json& p : j["points"]) {
        require(p.is_array(), "each point must be an array");
        LVec v;
        for (const Json& c : p) {
            require(c.is_number_integer(), "point coordinates must be integers");
            v.push_back(c.get<long long>());
        }
        pts.push_back(std::move(v));
    }
    return LatticeConfiguration(d, std::move(pts));
}

Json to_json(const LatticePolytope& p) {
    Json j;
    j["d"] = p.d;
    j["dim"] = p.dim;
    j["degenerate"] = p.degenerate;
    j["vertices"] = Json::array();
    for (const LVec& v : p.vertices) j["vertices"].push_back(v);
    j["facets"] = Json::array();
    for (const Facet& f : p.facets) {
        Json jf;
        jf["normal"] = f.normal;
        jf["offset"] = f.offset;
        j["facets"].push_back(jf);
    }
    return j;
}

Json to_json(const LaurentPolynomial& f) {
    Json j;
    j["d"] = f.d;
    j["terms"] = Json::array();
    for (const auto& [e, c] : f.terms) {
        Json t;
        t["exp"] = e;
        t["coeff"] = rat_to_string(c);
        j["terms"].push_back(t);
    }
    return j;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
    require(j.is_object() && j.contains("d") && j.contains("terms"),
            "polynomial needs fields 'd' and 'terms'");
    LaurentPolynomial f(j["d"].get<int>());
    require(j["terms"].is_array(), "'terms' must be an array");
    for (const Json& t : j["terms"]) {
        require(t.is_object() && t.contains("exp") && t.contains("coeff"),
                "each term needs 'exp' and 'coeff'");
        Expo e;
        for (const Json& c : t["exp"]) e.push_back(c.get<int>());
        require(static_cast<int>(e.size()) == f.d, "exponent length differs from 'd'");
        f.add_term(e, rat_from_string(t["coeff"].get<std::string>()));
    }
    return f;
}

Json to_json(const RationalPoint& p) {
    Json j = Json::array();
    for (const Rat& c : p.coords) j.push_back(rat_to_string(c));
    return j;
}

RationalPoint point_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "a point is a nonempty array of rationals");
    std::vector<Rat> coords;
    for (const Json& c : j) {
        require(c.is_string(), "coordinates are 'p/q' strings");
        coords.push_back(rat_from_string(c.get<std::string>()));
    }
    return RationalPoint(std::move(coords));
}

std::vector<RationalPoint> points_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("points") ? j["points"] : j;
    require(arr.is_array() && !arr.empty(), "expected a nonempty array of points");
    std::vector<RationalPoint> out;
    for (const Json& p : arr) out.push_back(point_from_json(p));
    return out;
}

Json to_json(const ChaslesStructure& s) {
    Json j;
    j["configurations"] = Json::array();
    for (const LatticeConfiguration& a : s.configurations) j["configurations"].push_back(to_json(a));
    j["partition"] = s.partition;
    j["N"] = s.N;
    j["d"] = s.d;
    return j;
}

ChaslesStructure structure_from_json(const Json& j) {
    require(j.is_object() && j.contains("configurations") && j.contains("partition"),
            "structure needs 'configurations' and 'partition'");
    std::vector<LatticeConfiguration> configs;
    for (const Json& c : j["configurations"]) configs.push_back(configuration_from_json(c));
    std::vector<int> partition;
    for (const Json& k : j["partition"]) partition.push_back(k.get<int>());
    return ChaslesStructure::create(std::move(configs), std::move(partition));
}

Json to_json(const DirectionalResultantRecord& r) {
    Json j;
    j["v"] = r.normal;
    j["mu"] = r.mu;
    j["lattice_index"] = r.lattice_index;
    j["value"] = rat_to_string(r.value);
    return j;
}

Json to_json(const ExtraPointResult& r) {
    Json j;
    j["point"] = to_json(r.point);
    j["certificates"] = Json::array();
    for (const Rat& c : r.certificates) j["certificates"].push_back(rat_to_string(c));
    Json diag;
    diag["sign_pattern"] = r.sign_pattern;
    diag["distinct_from_inputs"] = r.distinct_from_inputs;
    diag["directional_resultants"] = Json::array();
    for (const auto& rec : r.diagnostics) diag["directional_resultants"].push_back(to_json(rec));
    j["diagnostics"] = diag;
    return j;
}

Json to_json(const TorusRootList& roots) {
    Json j;
    j["tolerance"] = roots.tolerance;
    j["roots"] = Json::array();
    for (const TorusRoot& r : roots.roots) {
        Json jr;
        jr["coords"] = Json::array();
        for (const auto& c : r.coords) {
            Json jc;
            jc["re"] = c.real();
            jc["im"] = c.imag();
            jr["coords"].push_back(jc);
        }
        jr["mult"] = r.multiplicity;
        jr["residual"] = r.residual;
        j["roots"].push_back(jr);
    }
    return j;
}

Json to_json(const EquivalenceClass& cls) {
    Json j;
    j["canonical"] = to_json(cls.canonical);
    Json k;
    k["vol"] = cls.key.vol;
    k["interior"] = cls.key.interior;
    k["boundary"] = cls.key.boundary;
    k["vertices"] = cls.key.vertex_count;
    k["edge_lengths"] = cls.key.edge_lengths;
    j["invariants"] = k;
    return j;
}

Json to_json(const CountStatistics& stats) {
    Json j;
    j["expected"] = stats.expected;
    j["trials"] = stats.trials;
    j["matching"] = stats.matching;
    j["mismatched"] = stats.mismatched;
    j["flagged"] = stats.flagged;
    j["seed"] = stats.seed;
    j["coefficient_bound"] = stats.coefficient_bound;
    Json hist = Json::object();
    for (const auto& [count, times] : stats.histogram) hist[std::to_string(count)] = times;
    j["histogram"] = hist;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string read_input(const std::string& path_or_dash) {
    if (path_or_dash == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path_or_dash);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path_or_dash + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace chasles
