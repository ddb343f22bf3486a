#pragma once

#include <string>
#include <vector>

#include "polyrec/incidence.hpp"

namespace polyrec {

// --- constructors ---------------------------------------------------------
// Vertex labelling is fixed per constructor so fixtures are byte-stable.

// d+1 vertices 0..d, facets = all d-subsets.  d >= 2.
VertexFacetIncidence simplex(int d);

// the m-gon: vertices 0..m-1 in cyclic order, facets = edges.  m >= 3.
VertexFacetIncidence polygon(int m);

// prism over a (d-1)-simplex: bottom b_i = i, top t_i = d+i,
// facets = two simplex bases plus d rectangular facets.  d >= 2.
VertexFacetIncidence simplicial_prism(int d);

// general prism: bottom keeps base labels, top vertex i maps to base.n + i
VertexFacetIncidence prism_over(const VertexFacetIncidence& base);

// apex gets label base.n; facets = base itself plus one per base facet
VertexFacetIncidence pyramid_over(const VertexFacetIncidence& base);

// base simplex 0..d-1, apexes d and d+1; 2d simplex facets.  d >= 3.
VertexFacetIncidence bipyramid_over_simplex(int d);

// pyramid over bipyramid_over_simplex(d-1); d+2 vertices.  d >= 3.
VertexFacetIncidence pyramid_over_bipyramid(int d);

// Minkowski sum of a d-simplex and a segment parallel to a triangular face
// but no edge; 2d+1 vertices.  Stored as derived fixture data; d in {3,4,5}.
VertexFacetIncidence pentasm(int d);

// the 6-vertex, 6-facet 3-polytope with two nonsimple vertices
VertexFacetIncidence tetragonal_antiwedge();

// the four nonpyramidal 4-polytopes with seven vertices and four nonsimple
// vertices, published incidences; facet counts 9, 8, 8, 7.  i in 1..4.
VertexFacetIncidence table1(int i);

// the five 3-polytopes with seven vertices and at most two nonsimple vertices
std::vector<VertexFacetIncidence> seven_vertex_3polytopes();

// --- fixture registry -----------------------------------------------------

enum class FixtureSource { constructed, tabulated, derived };

struct FixtureRecord {
    std::string name;
    VertexFacetIncidence vfi;
    FixtureSource source;
};

const std::vector<FixtureRecord>& all_fixtures();
// nullptr when unknown
const FixtureRecord* find_fixture(const std::string& name);

} // namespace polyrec
