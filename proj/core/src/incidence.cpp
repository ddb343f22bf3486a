#include "polyrec/incidence.hpp"

#include <algorithm>
#include <string>

namespace polyrec {

VertexFacetIncidence::VertexFacetIncidence(int d_, int n_, std::vector<VertexSet> facets_)
    : d(d_), n(n_), facets(std::move(facets_)) {
    if (d < 2) throw Error(errc::bad_dimension, "dimension must be at least 2, got " + std::to_string(d));
    if (n > 64) throw Error(errc::degenerate_input, "at most 64 vertices supported");
    if (n < d + 1)
        throw Error(errc::degenerate_input,
                    "a " + std::to_string(d) + "-polytope needs at least " + std::to_string(d + 1) + " vertices");
    if (static_cast<int>(facets.size()) < d + 1)
        throw Error(errc::degenerate_input,
                    "a " + std::to_string(d) + "-polytope needs at least " + std::to_string(d + 1) + " facets");

    VertexSet all = VertexSet::full(n);
    for (const VertexSet& f : facets) {
        if (!f.subset_of(all))
            throw Error(errc::bad_index, "facet vertex out of range 0.." + std::to_string(n - 1));
        if (f.count() < d)
            throw Error(errc::not_polytopal, "every facet of a " + std::to_string(d) +
                                                 "-polytope has at least " + std::to_string(d) + " vertices");
    }
    for (int v = 0; v < n; ++v) {
        int cnt = 0;
        for (const VertexSet& f : facets)
            if (f.contains(v)) ++cnt;
        if (cnt < d)
            throw Error(errc::not_polytopal,
                        "vertex " + std::to_string(v) + " lies in only " + std::to_string(cnt) + " facets");
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && facets[i].subset_of(facets[j]))
                throw Error(errc::not_polytopal, "facet " + std::to_string(i) +
                                                     " is contained in facet " + std::to_string(j));

    std::sort(facets.begin(), facets.end(), lex_less);
}

VertexFacetIncidence VertexFacetIncidence::from_lists(int d, int n,
                                                      const std::vector<std::vector<int>>& lists) {
    std::vector<VertexSet> sets;
    sets.reserve(lists.size());
    for (const auto& list : lists) {
        VertexSet s;
        for (int v : list) {
            if (v < 0 || v >= 64) throw Error(errc::bad_index, "vertex index " + std::to_string(v));
            if (s.contains(v)) throw Error(errc::bad_index, "duplicate vertex " + std::to_string(v) + " in facet");
            s.insert(v);
        }
        sets.push_back(s);
    }
    return VertexFacetIncidence(d, n, std::move(sets));
}

std::vector<std::vector<int>> VertexFacetIncidence::facet_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets.size());
    for (const VertexSet& f : facets) out.push_back(f.to_vector());
    return out;
}

VertexSet VertexFacetIncidence::intersection_of_facets_containing(VertexSet s) const {
    VertexSet acc = VertexSet::full(n);
    for (const VertexSet& f : facets)
        if (s.subset_of(f)) acc = acc & f;
    return acc;
}

} // namespace polyrec
