#pragma once

#include <optional>
#include <string>

#include "polyrec/graph.hpp"
#include "polyrec/incidence.hpp"

namespace polyrec {

struct GraphFile {
    Graph graph;
    std::optional<int> d;
};

enum class FileKind { graph, incidence };

// Files are single JSON objects: {"n":., "edges":[[i,j],...], "d":.?} or
// {"d":., "n":., "facets":[[...],...]}.  All loaders throw parse_error on
// malformed input or violated field invariants.
FileKind detect_file(const std::string& text);

GraphFile parse_graph_file(const std::string& text);
VertexFacetIncidence parse_incidence_file(const std::string& text);

GraphFile load_graph_file(const std::string& path);
VertexFacetIncidence load_incidence_file(const std::string& path);

std::string read_file(const std::string& path); // throws parse_error

// canonical two-space-indented JSON, sorted facets, trailing newline
std::string format_incidence(const VertexFacetIncidence& vfi);
std::string format_graph(const Graph& g, std::optional<int> d = std::nullopt);

} // namespace polyrec
