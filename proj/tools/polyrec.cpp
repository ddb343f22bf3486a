#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyrec/catalogue.hpp"
#include "polyrec/io.hpp"
#include "polyrec/isomorphism.hpp"
#include "polyrec/lattice.hpp"
#include "polyrec/reconstruct.hpp"
#include "polyrec/structure.hpp"
#include "polyrec/verify.hpp"

namespace {

using namespace polyrec;

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case errc::parse_error:
    case errc::unknown_suite:
    case errc::unknown_fixture:
        return 2;
    case errc::budget_exceeded:
        return 5;
    default:
        return 4;
    }
}

std::string joined(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

int need_dimension(const std::optional<int>& flag, const std::optional<int>& from_file) {
    if (flag) return *flag;
    if (from_file) return *from_file;
    throw Error(errc::parse_error, "dimension required: pass --d or store \"d\" in the file");
}

int run_info(const std::string& path, std::optional<int> dflag) {
    std::string text = read_file(path);
    if (detect_file(text) == FileKind::incidence) {
        VertexFacetIncidence vfi = parse_incidence_file(text);
        FaceLattice lat = build_lattice(vfi);
        Graph g = graph_of(lat);
        PolytopeStats st = stats(g, vfi.d);
        std::vector<int> degrees = st.degrees;
        std::sort(degrees.begin(), degrees.end());
        PyramidDecomposition dec = pyramid_decompose(vfi);
        std::cout << "kind: incidence\n";
        std::cout << "d: " << vfi.d << "\n";
        std::cout << "n: " << vfi.n << "\n";
        std::cout << "facets: " << vfi.facets.size() << "\n";
        std::cout << "f-vector: " << joined(lat.f_vector()) << "\n";
        std::cout << "degrees: " << joined(degrees) << "\n";
        std::cout << "excess: " << st.xi << "\n";
        std::cout << "nonsimple: " << joined(st.nonsimple.to_vector()) << "\n";
        std::cout << "pyramid-fold: " << dec.fold << "\n";
        if (dec.fold > 0) std::cout << "pyramid-apexes: " << joined(dec.apexes) << "\n";
        std::cout << "balinski: " << (balinski_check(g, vfi.d) ? "ok" : "FAIL") << "\n";
        return 0;
    }
    GraphFile gf = parse_graph_file(text);
    int d = need_dimension(dflag, gf.d);
    PolytopeStats st = stats(gf.graph, d);
    std::vector<int> degrees = st.degrees;
    std::sort(degrees.begin(), degrees.end());
    std::cout << "kind: graph\n";
    std::cout << "d: " << d << "\n";
    std::cout << "n: " << gf.graph.n << "\n";
    std::cout << "edges: " << gf.graph.edges.size() << "\n";
    std::cout << "degrees: " << joined(degrees) << "\n";
    std::cout << "excess: " << st.xi << "\n";
    std::cout << "nonsimple: " << joined(st.nonsimple.to_vector()) << "\n";
    std::cout << "balinski: " << (balinski_check(gf.graph, d) ? "ok" : "FAIL") << "\n";
    return 0;
}

int run_reconstruct(const std::string& path, std::optional<int> dflag,
                    std::uint64_t max_orientations) {
    std::string text = read_file(path);
    if (detect_file(text) != FileKind::graph)
        throw Error(errc::parse_error, "reconstruct expects a graph file");
    GraphFile gf = parse_graph_file(text);
    int d = need_dimension(dflag, gf.d);
    ReconstructOptions opt;
    opt.max_orientations = max_orientations;
    ReconstructOutcome out = reconstruct(gf.graph, d, opt);
    if (const CoverageVerdict* verdict = std::get_if<CoverageVerdict>(&out)) {
        std::cout << "not covered: " << verdict->reason << " (d=" << verdict->d << ", n="
                  << verdict->n << ", excess=" << verdict->excess << ", nonsimple="
                  << verdict->nonsimple_count << ")\n";
        return 3;
    }
    std::cout << format_incidence(std::get<ReconstructionResult>(out).vfi);
    return 0;
}

Graph graph_from_any(const std::string& path) {
    std::string text = read_file(path);
    if (detect_file(text) == FileKind::incidence)
        return graph_of(build_lattice(parse_incidence_file(text)));
    return parse_graph_file(text).graph;
}

VertexFacetIncidence incidence_from(const std::string& path) {
    std::string text = read_file(path);
    if (detect_file(text) != FileKind::incidence)
        throw Error(errc::parse_error, "this mode needs incidence files: " + path);
    return parse_incidence_file(text);
}

int run_compare(const std::string& a, const std::string& b, const std::string& mode) {
    if (mode == "graph") {
        bool same = graphs_isomorphic(graph_from_any(a), graph_from_any(b)).has_value();
        std::cout << (same ? "isomorphic\n" : "not isomorphic\n");
        return same ? 0 : 1;
    }
    if (mode == "lattice") {
        bool same = are_equivalent(incidence_from(a), incidence_from(b)).has_value();
        std::cout << (same ? "equivalent\n" : "not equivalent\n");
        return same ? 0 : 1;
    }
    if (mode.rfind("skeleton:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(mode.substr(9));
        } catch (const std::exception&) {
            throw Error(errc::parse_error, "bad skeleton rank in --mode " + mode);
        }
        Skeleton sa = k_skeleton(build_lattice(incidence_from(a)), k);
        Skeleton sb = k_skeleton(build_lattice(incidence_from(b)), k);
        bool same = skeletons_isomorphic(sa, sb);
        std::cout << (same ? "isomorphic\n" : "not isomorphic\n");
        return same ? 0 : 1;
    }
    throw Error(errc::parse_error, "unknown --mode " + mode +
                                       " (graph, skeleton:k, lattice)");
}

int run_verify(const std::string& suite, std::uint64_t max_orientations) {
    ReconstructOptions opt;
    opt.max_orientations = max_orientations;
    SuiteReport rep = run_suite(suite, opt);
    int passed = 0;
    for (const PropertyResult& c : rep.checks) {
        if (c.pass) {
            ++passed;
            std::cout << "pass " << c.name << "\n";
        } else {
            std::cout << "FAIL " << c.name << ": " << c.witness << "\n";
        }
    }
    std::cout << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size()
              << " passed\n";
    return rep.all_pass() ? 0 : 1;
}

int run_catalogue(const std::string& name, std::optional<int> param) {
    if (param) {
        int k = *param;
        if (name == "simplex") {
            std::cout << format_incidence(simplex(k));
        } else if (name == "polygon") {
            std::cout << format_incidence(polygon(k));
        } else if (name == "prism") {
            std::cout << format_incidence(simplicial_prism(k));
        } else if (name == "bipyramid") {
            std::cout << format_incidence(bipyramid_over_simplex(k));
        } else if (name == "pyr-bipyramid") {
            std::cout << format_incidence(pyramid_over_bipyramid(k));
        } else if (name == "pentasm") {
            std::cout << format_incidence(pentasm(k));
        } else if (name == "table1") {
            std::cout << format_incidence(table1(k));
        } else {
            throw Error(errc::unknown_fixture, name + " " + std::to_string(k));
        }
        return 0;
    }
    if (name == "antiwedge") {
        std::cout << format_incidence(tetragonal_antiwedge());
        return 0;
    }
    const FixtureRecord* rec = find_fixture(name);
    if (!rec) throw Error(errc::unknown_fixture, name);
    std::cout << format_incidence(rec->vfi);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial polytope toolkit"};
    app.require_subcommand(1);

    std::string path, path_b, mode = "graph", suite, name;
    std::optional<int> dflag, param;
    std::uint64_t max_orientations = ReconstructOptions{}.max_orientations;

    CLI::App* info = app.add_subcommand("info", "summarise a graph or incidence file");
    info->add_option("path", path)->required();
    info->add_option("--d", dflag, "polytope dimension (graph files)");

    CLI::App* rec = app.add_subcommand("reconstruct", "facet list from a graph file");
    rec->add_option("path", path)->required();
    rec->add_option("--d", dflag, "polytope dimension");
    rec->add_option("--max-orientations", max_orientations,
                    "orientation budget before giving up");

    CLI::App* cmp = app.add_subcommand("compare", "compare two files");
    cmp->add_option("a", path)->required();
    cmp->add_option("b", path_b)->required();
    cmp->add_option("--mode", mode, "graph, skeleton:k, or lattice");

    CLI::App* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("--suite", suite)->required();
    ver->add_option("--max-orientations", max_orientations,
                    "orientation budget before giving up");

    CLI::App* cat = app.add_subcommand("catalogue", "emit a fixture");
    cat->add_option("name", name)->required();
    cat->add_option("param", param, "constructor parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return run_info(path, dflag);
        if (rec->parsed()) return run_reconstruct(path, dflag, max_orientations);
        if (cmp->parsed()) return run_compare(path, path_b, mode);
        if (ver->parsed()) return run_verify(suite, max_orientations);
        if (cat->parsed()) return run_catalogue(name, param);
    } catch (const polyrec::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    return 2;
}
