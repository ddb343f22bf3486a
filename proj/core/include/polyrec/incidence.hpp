#pragma once

#include <vector>

#include "polyrec/types.hpp"

namespace polyrec {

// Vertex-facet incidences of a d-polytope with vertices 0..n-1.
// Construction validates the combinatorial sanity conditions that can be
// checked without building the lattice (the grading and diamond conditions
// are checked by build_lattice) and stores the facet list canonically
// (each facet an ascending vertex list, facets in lexicographic order).
struct VertexFacetIncidence {
    int d = 0;
    int n = 0;
    std::vector<VertexSet> facets;

    VertexFacetIncidence(int d, int n, std::vector<VertexSet> facets);

    static VertexFacetIncidence from_lists(int d, int n,
                                           const std::vector<std::vector<int>>& lists);

    std::vector<std::vector<int>> facet_lists() const;

    // intersection of the vertex sets of all facets containing s
    // (the full vertex set when no facet contains s)
    VertexSet intersection_of_facets_containing(VertexSet s) const;

    friend bool operator==(const VertexFacetIncidence& a,
                           const VertexFacetIncidence& b) = default;
};

} // namespace polyrec
