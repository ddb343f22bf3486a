#pragma once

#include <vector>

#include "polyrec/graph.hpp"
#include "polyrec/incidence.hpp"
#include "polyrec/types.hpp"

namespace polyrec {

struct Face {
    VertexSet verts;
    int rank = 0;

    friend bool operator==(const Face& a, const Face& b) = default;
};

// Full face lattice: all faces including the empty face (rank -1) and the
// polytope itself (rank d), ordered by (rank, vertex set).
struct FaceLattice {
    int d = 0;
    int n = 0;
    std::vector<Face> faces;
    std::vector<std::pair<int, int>> covers; // (lower, upper) indices into faces

    std::vector<VertexSet> faces_of_rank(int r) const;
    std::vector<VertexSet> facets() const { return faces_of_rank(d - 1); }
    std::vector<int> f_vector() const;     // f_0 .. f_{d-1}
    // index into faces, or -1 when s is not a face
    int face_index(VertexSet s) const;
};

// Intersection closure of the facet sets, ranked by longest chain.
// Throws not_polytopal when the result is not graded of rank d+1, when an
// atom is not a single vertex, or when the diamond condition fails.
FaceLattice build_lattice(const VertexFacetIncidence& vfi);

Graph graph_of(const FaceLattice& lat);

struct Skeleton {
    int k = 0;
    std::vector<Face> faces; // all faces of rank 0..k, sorted by (rank, verts)
};

// throws rank_out_of_range unless 0 <= k <= d-1
Skeleton k_skeleton(const FaceLattice& lat, int k);

} // namespace polyrec
