#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/incidence.hpp"
#include "polyrec/orientation.hpp"

namespace polyrec {

struct ReconstructOptions {
    // complete orientations examined before giving up with budget_exceeded
    std::uint64_t max_orientations = 20'000'000;
    int threads = 0; // 0 = hardware concurrency
};

enum class Method { simple, pyramid_peel, excess, small_vertex };

const char* method_name(Method m);

struct Certificate {
    bool lattice_built = false;
    bool diamond_ok = false;
    bool graph_roundtrip = false;
};

struct ReconstructionResult {
    VertexFacetIncidence vfi;
    Method method;
    Certificate certificate;
};

struct CoverageVerdict {
    bool covered = false;
    std::string reason;
    int excess = 0;
    int nonsimple_count = 0;
    int d = 0;
    int n = 0;
};

using ReconstructOutcome = std::variant<ReconstructionResult, CoverageVerdict>;

// Dispatch: simple polytopes via the orientation minimum; a universal vertex
// with at most d-1 nonsimple vertices via apex peeling; excess 1..d-1 and
// d >= 4 via the frame/orientation machinery; d <= 3 via the planar
// embedding.  Anything else yields an uncovered verdict.
// Throws not_balinski when the graph is not d-connected and
// validation_failed when a produced facet list does not round-trip.
ReconstructOutcome reconstruct(const Graph& g, int d, const ReconstructOptions& opt = {});

// facets of a simple polytope: feasible sets initial with respect to some
// orientation minimising the kalai objective.  Throws not_simple.
std::vector<VertexSet> simple_reconstruct(const Graph& g, int d,
                                          const ReconstructOptions& opt = {});

// facets of a polytope with excess 1..d-1, d >= 4.  Throws core_unrecognized
// and validation_failed.
std::vector<VertexSet> excess_reconstruct(const Graph& g, int d,
                                          const ReconstructOptions& opt = {});

// The unique minimal feasible subset containing the frame (root, leaves, and
// their edges).  Throws no_completion and ambiguous_completion (two
// incomparable minimal feasible supersets; callers arbitrate by validation).
VertexSet facet_completion(const Graph& g, int d, const Frame& seed);

// facets of a 3-polytope: peripheral (induced, non-separating) cycles of the
// 3-connected planar graph.  Throws validation_failed when the cycle count
// contradicts the Euler relation.
std::vector<VertexSet> planar_facets(const Graph& g);

struct AmbiguityGroups {
    // graph_classes[i] = indices of inputs with pairwise isomorphic graphs;
    // lattice_classes[i] partitions that class by combinatorial equivalence
    std::vector<std::vector<int>> graph_classes;
    std::vector<std::vector<std::vector<int>>> lattice_classes;
};

AmbiguityGroups find_graph_ambiguities(const std::vector<VertexFacetIncidence>& fixtures);

} // namespace polyrec
