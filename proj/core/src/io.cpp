#include "polyrec/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyrec/types.hpp"

namespace polyrec {

namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw Error(errc::parse_error, "expected a JSON object");
    return j;
}

int read_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(errc::parse_error, std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::vector<int>> read_int_lists(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw Error(errc::parse_error, std::string("missing array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const json& row : j[key]) {
        if (!row.is_array())
            throw Error(errc::parse_error, std::string("\"") + key + "\" must hold arrays");
        std::vector<int> items;
        for (const json& x : row) {
            if (!x.is_number_integer())
                throw Error(errc::parse_error,
                            std::string("\"") + key + "\" must hold integer arrays");
            items.push_back(x.get<int>());
        }
        out.push_back(std::move(items));
    }
    return out;
}

} // namespace

FileKind detect_file(const std::string& text) {
    json j = parse_object(text);
    if (j.contains("facets")) return FileKind::incidence;
    if (j.contains("edges")) return FileKind::graph;
    throw Error(errc::parse_error, "object has neither \"facets\" nor \"edges\"");
}

GraphFile parse_graph_file(const std::string& text) {
    json j = parse_object(text);
    int n = read_int(j, "n");
    if (n < 1 || n > 64) throw Error(errc::parse_error, "vertex count out of range");
    std::vector<std::pair<int, int>> edges;
    for (const std::vector<int>& e : read_int_lists(j, "edges")) {
        if (e.size() != 2) throw Error(errc::parse_error, "edges must be vertex pairs");
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
            throw Error(errc::parse_error, "edge endpoints out of range");
        edges.emplace_back(std::min(e[0], e[1]), std::max(e[0], e[1]));
    }
    GraphFile out;
    if (j.contains("d")) {
        if (!j["d"].is_number_integer())
            throw Error(errc::parse_error, "field \"d\" must be an integer");
        out.d = j["d"].get<int>();
    }
    try {
        out.graph = Graph(n, std::move(edges));
    } catch (const Error& e) {
        throw Error(errc::parse_error, e.what());
    }
    return out;
}

VertexFacetIncidence parse_incidence_file(const std::string& text) {
    json j = parse_object(text);
    int d = read_int(j, "d");
    int n = read_int(j, "n");
    std::vector<VertexSet> facets;
    for (const std::vector<int>& f : read_int_lists(j, "facets")) {
        VertexSet s;
        for (int v : f) {
            if (v < 0 || v >= 64 || s.contains(v))
                throw Error(errc::parse_error, "facet vertices must be distinct and in range");
            s.insert(v);
        }
        facets.push_back(s);
    }
    try {
        return VertexFacetIncidence(d, n, std::move(facets));
    } catch (const Error& e) {
        throw Error(errc::parse_error, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse_error, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphFile load_graph_file(const std::string& path) {
    return parse_graph_file(read_file(path));
}

VertexFacetIncidence load_incidence_file(const std::string& path) {
    return parse_incidence_file(read_file(path));
}

std::string format_incidence(const VertexFacetIncidence& vfi) {
    json j;
    j["d"] = vfi.d;
    j["n"] = vfi.n;
    json facets = json::array();
    for (const VertexSet& f : vfi.facets) facets.push_back(f.to_vector());
    j["facets"] = std::move(facets);
    return j.dump(2) + "\n";
}

std::string format_graph(const Graph& g, std::optional<int> d) {
    json j;
    if (d) j["d"] = *d;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(std::vector<int>{a, b});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace polyrec
