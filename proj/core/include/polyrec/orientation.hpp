#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/lattice.hpp"
#include "polyrec/types.hpp"

namespace polyrec {

// Acyclic orientation of a graph with at most 64 edges.  Bit e of dir set
// means edge e runs from the higher to the lower endpoint.
struct Orientation {
    Graph g;
    std::uint64_t dir = 0;

    std::pair<int, int> directed(int e) const {
        auto [a, b] = g.edges[static_cast<std::size_t>(e)];
        return (dir >> e) & 1 ? std::pair{b, a} : std::pair{a, b};
    }

    int indegree(int v) const;
    VertexSet out_neighbours(int v) const;
    bool is_acyclic() const;
};

// direct every edge from the earlier to the later vertex of order
Orientation orientation_from_order(const Graph& g, const std::vector<int>& order);

struct OrientationConstraints {
    // every edge leaving forced_initial is directed outward, none inward
    VertexSet forced_initial;
    std::vector<std::pair<int, int>> forced_edges; // (from, to)
};

// Depth-first enumeration of all acyclic orientations satisfying the
// constraints, each exactly once, in a fixed order (edges decided by index,
// low-to-high direction first).  Restartable: a fresh enumerator replays the
// same stream, and the search tree can be partitioned by prefix.
class AcyclicEnumerator {
public:
    explicit AcyclicEnumerator(const Graph& g, OrientationConstraints c = {});

    // next orientation in stream order, or nullopt when exhausted
    std::optional<Orientation> next();

    // complete orientations produced so far
    std::uint64_t produced() const { return produced_; }

private:
    bool creates_cycle(int from, int to) const;
    Graph g_;
    std::uint64_t fixed_mask_ = 0;  // edges with a forced direction
    std::uint64_t fixed_dir_ = 0;
    std::vector<VertexSet> out_;    // adjacency of decided edges
    std::vector<int> free_edges_;
    std::vector<int> choice_;       // -1 undecided, else 0/1
    int depth_ = 0;
    bool done_ = false;
    bool first_ = true;
    std::uint64_t produced_ = 0;
    std::uint64_t current_dir_ = 0;
};

// count of acyclic orientations (convenience over the enumerator)
std::uint64_t count_acyclic_orientations(const Graph& g);

// Unique sink in the subgraph induced by every facet; with all_faces also in
// every nonempty face including the whole polytope.
// Throws graph_mismatch when o.g is not the graph of lat.
bool is_good(const Orientation& o, const FaceLattice& lat, bool all_faces = false);

// counts of simple vertices (degree d) by indegree
struct IndegreeHistogram {
    std::vector<int> counts;

    int at(int k) const {
        return k >= 0 && k < static_cast<int>(counts.size())
                   ? counts[static_cast<std::size_t>(k)]
                   : 0;
    }
};

IndegreeHistogram indegree_histogram(const Orientation& o, int d);

// h_{d-1} + d * h_d
int f_R_objective(const IndegreeHistogram& h, int d);

// sum over all vertices of 2^indegree
std::uint64_t kalai_objective(const Orientation& o);

// induced, (d-1)-connected, and every simple vertex of g in the subset has
// degree exactly d-1 inside it
bool is_feasible(const Graph& g, int d, VertexSet subset);

// no edge directed from outside the subset into it
bool is_initial(const Orientation& o, VertexSet subset);

// all feasible supersets of r, ordered by (size, mask)
std::vector<VertexSet> feasible_supersets(const Graph& g, int d, VertexSet r);

struct Frame {
    int root = 0;
    VertexSet leaves;
};

// Membership of o in the orientation class A_R: some feasible subset H
// containing r is initial in o with r initial inside H.  Returns the first
// witness H in (size, mask) order, or nullopt.
// Throws r_not_clique unless r spans a complete subgraph.
std::optional<VertexSet> in_A_R(const Orientation& o, int d, VertexSet r);

} // namespace polyrec
