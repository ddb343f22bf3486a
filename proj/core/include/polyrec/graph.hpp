#pragma once

#include <utility>
#include <vector>

#include "polyrec/types.hpp"

namespace polyrec {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // each (i, j) with i < j, sorted
    std::vector<VertexSet> adj;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int degree(int v) const { return adj[static_cast<std::size_t>(v)].count(); }
    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)].contains(v); }
    // index into edges, or -1
    int edge_index(int u, int v) const;

    // subgraph induced on s, relabelled 0..|s|-1 in increasing vertex order
    Graph induced(VertexSet s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n == b.n && a.edges == b.edges;
    }
};

struct PolytopeStats {
    int d = 0;
    std::vector<int> degrees;
    int xi = 0;            // excess: sum of (deg v - d)
    VertexSet nonsimple;   // vertices of degree > d
};

// throws bad_dimension (d < 2) and degree_too_low (some degree < d)
PolytopeStats stats(const Graph& g, int d);

// minimum vertex cut of the subgraph induced on sub is >= k
// (complete graphs count as (|sub|-1)-connected)
bool connectivity_at_least(const Graph& g, VertexSet sub, int k);

// Balinski check: the graph of a d-polytope is d-connected
bool balinski_check(const Graph& g, int d);

} // namespace polyrec
