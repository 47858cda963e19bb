#include "chasles/chasles_core.hpp"
#include "chasles/classifier.hpp"
#include "chasles/json_io.hpp"
#include "chasles/solver_numeric.hpp"
#include "chasles/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace chasles;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::DimensionMismatch:
            return 2;
        default:
            return 3;  // mathematical degeneracy
    }
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_analyze(const std::string& input, bool json_output) {
    LatticeConfiguration a = configuration_from_json(parse_json(read_input(input)));
    int dim = dimension(a);
    Json j;
    j["d"] = a.d;
    j["points"] = a.size();
    j["dim"] = dim;
    if (dim == a.d) {
        ConfigurationReport rep = is_chasles_configuration(a);
        j["vol"] = rep.vol;
        j["saturated"] = rep.saturated;
        j["chasles"] = rep.chasles;
        if (rep.chasles) j["N"] = rep.N;
        if (a.d == 2) {
            PickCounts pc = pick_counts(a);
            j["interior"] = pc.interior;
            j["boundary"] = pc.boundary;
        }
    } else {
        j["vol"] = 0;
        j["degenerate"] = true;
        j["saturated"] = is_saturated(a);
    }
    if (json_output) {
        emit(j, "");
        return 0;
    }
    std::cout << "dim: " << j["dim"] << "\n";
    std::cout << "points: " << j["points"] << "\n";
    std::cout << "vol: " << j["vol"] << "\n";
    if (j.contains("interior"))
        std::cout << "interior: " << j["interior"] << ", boundary: " << j["boundary"] << "\n";
    if (j.contains("saturated")) std::cout << "saturated: " << (j["saturated"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("chasles")) {
        std::cout << "Chasles: " << (j["chasles"].get<bool>() ? "yes" : "no");
        if (j.contains("N")) std::cout << ", N=" << j["N"];
        std::cout << "\n";
    }
    return 0;
}

int cmd_extra_point(const std::string& structure_path, const std::string& points_path,
                    bool eliminant, double tol, double cluster_tol) {
    ChaslesStructure s = structure_from_json(parse_json(read_input(structure_path)));
    std::vector<RationalPoint> pts = points_from_json(parse_json(read_input(points_path)));
    SolverOptions opts;
    opts.tol = tol;
    opts.cluster_tol = cluster_tol;
    ExtraPointResult res = eliminant ? extra_point_via_eliminant(s, pts, opts) : extra_point(s, pts);
    emit(to_json(res), "");
    return 0;
}

int cmd_mixed_volume(const std::string& input) {
    Json j = parse_json(read_input(input));
    std::vector<std::pair<LatticeConfiguration, int>> entries;
    if (j.is_object() && j.contains("entries")) {
        for (const Json& e : j["entries"])
            entries.emplace_back(configuration_from_json(e["configuration"]),
                                 e.value("multiplicity", 1));
    } else if (j.is_array()) {
        for (const Json& e : j) entries.emplace_back(configuration_from_json(e), 1);
    } else {
        throw Error(ErrorKind::ParseError, "expected {\"entries\": [...]} or an array of configurations");
    }
    std::cout << mixed_volume(entries) << "\n";
    return 0;
}

int cmd_classify(int box, int max_vertices, const std::string& out_path) {
    std::vector<EquivalenceClass> classes = classify_planar_saturated_chasles(box, max_vertices);
    Json j;
    j["box"] = box;
    j["max_vertices"] = max_vertices;
    j["count"] = classes.size();
    j["classes"] = Json::array();
    for (const EquivalenceClass& c : classes) j["classes"].push_back(to_json(c));
    emit(j, out_path);
    return 0;
}

int cmd_solve2d(const std::string& input, double tol, double cluster_tol) {
    Json j = parse_json(read_input(input));
    if (!j.is_object() || !j.contains("f") || !j.contains("g"))
        throw Error(ErrorKind::ParseError, "expected {\"f\": polynomial, \"g\": polynomial}");
    LaurentPolynomial f = polynomial_from_json(j["f"]);
    LaurentPolynomial g = polynomial_from_json(j["g"]);
    SolverOptions opts;
    opts.tol = tol;
    opts.cluster_tol = cluster_tol;
    emit(to_json(solve_2d(f, g, opts)), "");
    return 0;
}

int cmd_family(int n, const std::string& out_path) {
    emit(to_json(family_pq(n)), out_path);
    return 0;
}

int cmd_count(const std::string& structure_path, long long trials, std::uint64_t seed, double tol,
              double cluster_tol) {
    ChaslesStructure s = structure_from_json(parse_json(read_input(structure_path)));
    SolverOptions opts;
    opts.tol = tol;
    opts.cluster_tol = cluster_tol;
    emit(to_json(count_torus_roots(s.configurations, s.partition, trials, seed, opts)), "");
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& only, bool json_output) {
    VerificationReport report = verify_paper(seed, only);
    if (json_output) {
        Json j;
        j["checks"] = Json::array();
        for (const CheckResult& c : report.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["anchor"] = c.anchor;
            jc["pass"] = c.pass;
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["ms"] = c.ms;
            j["checks"].push_back(jc);
        }
        j["all_pass"] = report.all_pass();
        emit(j, "");
    } else {
        for (const CheckResult& c : report.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.anchor << ") "
                      << std::fixed << std::setprecision(1) << c.ms << " ms";
            if (!c.pass) std::cout << "\n       expected: " << c.expected << "\n       computed: " << c.computed;
            std::cout << "\n";
        }
    }
    return report.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chasles-configuration toolkit: lattice analysis, extra points, "
                 "classification, numeric root counting"};
    app.require_subcommand(1);

    double tol = 1e-10, cluster_tol = 1e-7;
    std::uint64_t seed = 424242;
    app.add_option("--tol", tol, "numeric residual tolerance")->capture_default_str();
    app.add_option("--cluster-tol", cluster_tol, "root clustering tolerance")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();

    std::string input = "-", points_path, out_path;
    bool json_output = false;

    auto* analyze = app.add_subcommand("analyze", "dimension, volume, saturation, Chasles verdict");
    analyze->add_option("config", input, "configuration JSON file or '-'");
    analyze->add_flag("--json", json_output, "machine-readable output");

    auto* extra = app.add_subcommand("extra-point", "extra common zero via directional resultants");
    extra->add_option("structure", input, "structure JSON file or '-'")->required();
    extra->add_option("points", points_path, "points JSON file")->required();

    auto* elim = app.add_subcommand("eliminant-point", "extra common zero via eliminants");
    elim->add_option("structure", input, "structure JSON file or '-'")->required();
    elim->add_option("points", points_path, "points JSON file")->required();

    auto* mixed = app.add_subcommand("mixed-volume", "mixed volume of configurations");
    mixed->add_option("entries", input, "entries JSON file or '-'");

    int box = 4, max_vertices = 6;
    auto* classify = app.add_subcommand("classify", "saturated planar classes up to equivalence");
    classify->add_option("--box", box, "search box [0,box]^2")->capture_default_str();
    classify->add_option("--max-vertices", max_vertices, "vertex bound")->capture_default_str();
    classify->add_option("--out", out_path, "output file");

    auto* solve = app.add_subcommand("solve2d", "numeric torus roots of a planar system");
    solve->add_option("system", input, "system JSON file or '-'");

    int family_n = 1;
    auto* family = app.add_subcommand("family", "quadrangle-pair structure");
    family->add_option("--n", family_n, "family index")->required();
    family->add_option("--out", out_path, "output file");

    long long trials = 50;
    auto* count = app.add_subcommand("count-roots", "root-count statistics for a structure");
    count->add_option("structure", input, "structure JSON file or '-'")->required();
    count->add_option("--trials", trials, "number of random systems")->capture_default_str();

    std::string only;
    auto* verify = app.add_subcommand("verify-paper", "re-run the reference results");
    verify->add_option("--only", only, "substring filter on check names");
    verify->add_flag("--json", json_output, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(input, json_output);
        if (extra->parsed()) return cmd_extra_point(input, points_path, false, tol, cluster_tol);
        if (elim->parsed()) return cmd_extra_point(input, points_path, true, tol, cluster_tol);
        if (mixed->parsed()) return cmd_mixed_volume(input);
        if (classify->parsed()) return cmd_classify(box, max_vertices, out_path);
        if (solve->parsed()) return cmd_solve2d(input, tol, cluster_tol);
        if (family->parsed()) return cmd_family(family_n, out_path);
        if (count->parsed()) return cmd_count(input, trials, seed, tol, cluster_tol);
        if (verify->parsed()) return cmd_verify(seed, only, json_output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
