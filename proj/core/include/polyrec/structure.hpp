#pragma once

#include <optional>
#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/incidence.hpp"

namespace polyrec {

// vertex contained in every facet but exactly one (lowest index wins)
std::optional<int> pyramid_apex(const VertexFacetIncidence& vfi);

struct PyramidDecomposition {
    std::vector<int> apexes;   // peeled in order, original labels
    VertexFacetIncidence base; // remaining labels compacted, order preserved
    int fold = 0;              // = apexes.size()
};

// maximal apex peeling; stops when the base would drop below dimension 2
PyramidDecomposition pyramid_decompose(const VertexFacetIncidence& vfi);

// Universal vertex of a graph claimed to have at most d-1 nonsimple
// vertices; such a polytope must be a pyramid at that vertex.
// Throws hypothesis_violated when the nonsimple count is >= d.
std::optional<int> apex_from_graph(const Graph& g, int d);

struct GraphPeel {
    int apex = 0;
    Graph base;                 // induced on the remaining vertices
    std::vector<int> base_to_orig;
};

GraphPeel peel_universal(const Graph& g, int apex);

enum class PrismPyramidVerdict { prism, pyramid, neither };

PrismPyramidVerdict is_prism_or_pyramid(const VertexFacetIncidence& vfi);

enum class DPlus3Type { prism3_pyramid, antiwedge_pyramid, pentagon_pyramid };

// Classification of graphs of d-polytopes with d+3 vertices and at most d-1
// nonsimple vertices: a (d-3)-fold pyramid over the simplicial 3-prism or
// the tetragonal antiwedge, or a (d-2)-fold pyramid over a pentagon.
// Throws hypothesis_violated (wrong vertex count or >= d nonsimple) and
// unrecognized (not the graph of such a polytope).
DPlus3Type classify_d_plus_3(const Graph& g, int d);

struct BasicExcessReport {
    int facet_pairs = 0;
    // facet index pairs with nonempty non-ridge intersection
    std::vector<std::pair<int, int>> nonridge_pairs;
};

// Checks two facts about facet intersections:
//  - if F /\ J is nonempty and not a ridge, every shared vertex is nonsimple;
//  - a vertex simple in a facet F but nonsimple in the polytope lies in some
//    facet J with F /\ J not a ridge.
// Throws lemma_violated with a witness; a violation means the input is not
// the incidence data of a polytope.
BasicExcessReport verify_basic_excess(const VertexFacetIncidence& vfi);

enum class CoreKind { empty, single, pair, simplex_face, quadrilateral, other };

struct NonsimpleCore {
    VertexSet vertices;
    CoreKind kind = CoreKind::empty;
};

// Classifies the nonsimple vertices of a graph with excess <= d-1:
// a (d-2)-clique of degree-(d+1) vertices (simplex_face), the d=5 excess-4
// quadrilateral of degree-6 vertices, or small sets handled separately.
// Throws excess_too_large when the excess is >= d.
NonsimpleCore nonsimple_core(const Graph& g, int d);

} // namespace polyrec
