#include "polyrec/structure.hpp"

#include <algorithm>
#include <string>

#include "polyrec/catalogue.hpp"
#include "polyrec/isomorphism.hpp"
#include "polyrec/lattice.hpp"

namespace polyrec {

std::optional<int> pyramid_apex(const VertexFacetIncidence& vfi) {
    for (int v = 0; v < vfi.n; ++v) {
        int missing = 0;
        for (const VertexSet& f : vfi.facets)
            if (!f.contains(v)) ++missing;
        if (missing == 1) return v;
    }
    return std::nullopt;
}

PyramidDecomposition pyramid_decompose(const VertexFacetIncidence& vfi) {
    PyramidDecomposition out{{}, vfi, 0};
    std::vector<int> orig(static_cast<std::size_t>(vfi.n));
    for (int v = 0; v < vfi.n; ++v) orig[static_cast<std::size_t>(v)] = v;

    while (out.base.d >= 3) {
        std::optional<int> apex = pyramid_apex(out.base);
        if (!apex) break;
        int a = *apex;
        // the base of the pyramid: drop the apex, relabel the rest in order
        std::vector<int> relabel(static_cast<std::size_t>(out.base.n), -1);
        std::vector<int> next_orig;
        int idx = 0;
        for (int v = 0; v < out.base.n; ++v)
            if (v != a) {
                relabel[static_cast<std::size_t>(v)] = idx++;
                next_orig.push_back(orig[static_cast<std::size_t>(v)]);
            }
        std::vector<VertexSet> facets;
        for (const VertexSet& f : out.base.facets) {
            if (!f.contains(a)) continue;
            VertexSet g;
            for (int v : f)
                if (v != a) g.insert(relabel[static_cast<std::size_t>(v)]);
            facets.push_back(g);
        }
        VertexFacetIncidence base(out.base.d - 1, out.base.n - 1, std::move(facets));
        out.apexes.push_back(orig[static_cast<std::size_t>(a)]);
        out.base = std::move(base);
        orig = std::move(next_orig);
    }
    out.fold = static_cast<int>(out.apexes.size());
    return out;
}

std::optional<int> apex_from_graph(const Graph& g, int d) {
    PolytopeStats st = stats(g, d);
    if (st.nonsimple.count() >= d)
        throw Error(errc::hypothesis_violated,
                    std::to_string(st.nonsimple.count()) + " nonsimple vertices with d = " +
                        std::to_string(d));
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) return v;
    return std::nullopt;
}

GraphPeel peel_universal(const Graph& g, int apex) {
    if (apex < 0 || apex >= g.n) throw Error(errc::bad_index, "apex out of range");
    VertexSet keep = VertexSet::full(g.n);
    keep.erase(apex);
    return GraphPeel{apex, g.induced(keep), keep.to_vector()};
}

PrismPyramidVerdict is_prism_or_pyramid(const VertexFacetIncidence& vfi) {
    if (vfi.n == 2 * vfi.d && are_equivalent(vfi, simplicial_prism(vfi.d)))
        return PrismPyramidVerdict::prism;
    if (pyramid_apex(vfi)) return PrismPyramidVerdict::pyramid;
    return PrismPyramidVerdict::neither;
}

DPlus3Type classify_d_plus_3(const Graph& g, int d) {
    if (g.n != d + 3)
        throw Error(errc::hypothesis_violated, "expected " + std::to_string(d + 3) +
                                                   " vertices, got " + std::to_string(g.n));
    PolytopeStats st = stats(g, d);
    if (st.nonsimple.count() >= d)
        throw Error(errc::hypothesis_violated,
                    std::to_string(st.nonsimple.count()) + " nonsimple vertices with d = " +
                        std::to_string(d));

    Graph cur = g;
    while (cur.n > 6) {
        int apex = -1;
        for (int v = 0; v < cur.n && apex < 0; ++v)
            if (cur.degree(v) == cur.n - 1) apex = v;
        if (apex < 0)
            throw Error(errc::unrecognized, "no universal vertex to peel at " +
                                                std::to_string(cur.n) + " vertices");
        cur = peel_universal(cur, apex).base;
    }

    FaceLattice prism_lat = build_lattice(simplicial_prism(3));
    if (graphs_isomorphic(cur, graph_of(prism_lat))) return DPlus3Type::prism3_pyramid;
    FaceLattice anti_lat = build_lattice(tetragonal_antiwedge());
    if (graphs_isomorphic(cur, graph_of(anti_lat))) return DPlus3Type::antiwedge_pyramid;
    FaceLattice wheel_lat = build_lattice(pyramid_over(polygon(5)));
    if (graphs_isomorphic(cur, graph_of(wheel_lat))) return DPlus3Type::pentagon_pyramid;
    throw Error(errc::unrecognized, "six-vertex remainder matches no base type");
}

BasicExcessReport verify_basic_excess(const VertexFacetIncidence& vfi) {
    FaceLattice lat = build_lattice(vfi);
    Graph g = graph_of(lat);
    PolytopeStats st = stats(g, vfi.d);
    auto nonsimple_in_p = [&](int v) { return st.degrees[static_cast<std::size_t>(v)] > vfi.d; };

    // facet intersections always appear in the intersection closure, so a
    // pairwise intersection is a face whenever build_lattice succeeded
    auto is_ridge = [&](VertexSet s) {
        int idx = lat.face_index(s);
        return idx >= 0 && lat.faces[static_cast<std::size_t>(idx)].rank == vfi.d - 2;
    };

    BasicExcessReport report;
    int m = static_cast<int>(vfi.facets.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            ++report.facet_pairs;
            VertexSet inter = vfi.facets[static_cast<std::size_t>(i)] &
                              vfi.facets[static_cast<std::size_t>(j)];
            if (inter.empty() || is_ridge(inter)) continue;
            report.nonridge_pairs.emplace_back(i, j);
            for (int v : inter)
                if (!nonsimple_in_p(v))
                    throw Error(errc::lemma_violated,
                                "vertex " + std::to_string(v) + " simple but facets " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    " meet in a non-ridge");
        }

    // a vertex simple within a facet yet nonsimple overall must see some
    // facet meeting that facet in a non-ridge
    for (int fi = 0; fi < m; ++fi) {
        const VertexSet& f = vfi.facets[static_cast<std::size_t>(fi)];
        for (int v : f) {
            if (!nonsimple_in_p(v)) continue;
            int deg_in_f = (g.adj[static_cast<std::size_t>(v)] & f).count();
            if (deg_in_f != vfi.d - 1) continue; // not simple within the facet
            bool witnessed = false;
            for (int fj = 0; fj < m && !witnessed; ++fj) {
                if (fj == fi || !vfi.facets[static_cast<std::size_t>(fj)].contains(v)) continue;
                VertexSet inter = f & vfi.facets[static_cast<std::size_t>(fj)];
                if (!is_ridge(inter)) witnessed = true;
            }
            if (!witnessed)
                throw Error(errc::lemma_violated,
                            "vertex " + std::to_string(v) + " simple in facet " +
                                std::to_string(fi) + " but no non-ridge neighbour facet");
        }
    }
    return report;
}

NonsimpleCore nonsimple_core(const Graph& g, int d) {
    PolytopeStats st = stats(g, d);
    if (st.xi >= d)
        throw Error(errc::excess_too_large,
                    "excess " + std::to_string(st.xi) + " with d = " + std::to_string(d));
    VertexSet ns = st.nonsimple;
    NonsimpleCore core{ns, CoreKind::other};
    int count = ns.count();

    if (count == 0) {
        core.kind = CoreKind::empty;
        return core;
    }
    // d-2 vertices of degree d+1 spanning a complete subgraph: the
    // simplex-face core of excess d-2
    if (count == d - 2 && count >= 2) {
        bool shape = true;
        for (int v : ns)
            if (st.degrees[static_cast<std::size_t>(v)] != d + 1) shape = false;
        for (int u : ns)
            for (int v : ns)
                if (u < v && !g.has_edge(u, v)) shape = false;
        if (shape) {
            core.kind = CoreKind::simplex_face;
            return core;
        }
    }
    if (count == 1) {
        core.kind = CoreKind::single;
        return core;
    }
    if (count == 2) {
        core.kind = CoreKind::pair;
        return core;
    }
    // the d=5, excess-4 pattern: four degree-6 vertices spanning a 4-cycle
    if (d == 5 && count == 4) {
        bool shape = true;
        for (int v : ns)
            if (st.degrees[static_cast<std::size_t>(v)] != 6) shape = false;
        int inside_edges = 0;
        for (int v : ns) {
            int inside = (g.adj[static_cast<std::size_t>(v)] & ns).count();
            if (inside != 2) shape = false;
            inside_edges += inside;
        }
        if (shape && inside_edges == 8) {
            // 2-regular on four vertices is either C4 or two disjoint edges;
            // connectivity separates them
            Graph sub = g.induced(ns);
            VertexSet seen;
            std::vector<int> stack{0};
            seen.insert(0);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : sub.adj[static_cast<std::size_t>(v)])
                    if (!seen.contains(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            if (seen.count() == 4) {
                core.kind = CoreKind::quadrilateral;
                return core;
            }
        }
    }
    return core;
}

} // namespace polyrec
