#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/incidence.hpp"
#include "polyrec/lattice.hpp"

namespace polyrec {

// Vertex bijection a -> b preserving adjacency, or nullopt.  Deterministic:
// vertices of a are mapped in index order, candidates tried in index order,
// so the lexicographically least isomorphism is returned.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b);

// Enumerates graph isomorphisms a -> b in the same deterministic order until
// the visitor returns true; returns whether the visitor accepted one.
bool for_each_graph_isomorphism(const Graph& a, const Graph& b,
                                const std::function<bool(const std::vector<int>&)>& visit);

// Combinatorial equivalence: a vertex bijection inducing a bijection of
// facet sets.  Returns the vertex bijection, or nullopt.
std::optional<std::vector<int>> are_equivalent(const VertexFacetIncidence& a,
                                               const VertexFacetIncidence& b);

// throws rank_mismatch when a.k != b.k
bool skeletons_isomorphic(const Skeleton& a, const Skeleton& b);

} // namespace polyrec
