#include "polyrec/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace polyrec {

namespace {

// per-vertex invariant: (degree, sorted neighbour degrees)
std::vector<std::pair<int, std::vector<int>>> signatures(const Graph& g) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nd;
        for (int w : g.adj[static_cast<std::size_t>(v)]) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        sig[static_cast<std::size_t>(v)] = {g.degree(v), std::move(nd)};
    }
    return sig;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<std::pair<int, std::vector<int>>> sig_a, sig_b;
    std::vector<int> map;   // a -> b, -1 unassigned
    std::vector<bool> used; // b-vertex taken
    bool stopped = false;

    bool extend(int v) {
        if (v == a.n) {
            stopped = visit(map);
            return stopped;
        }
        for (int w = 0; w < b.n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(v + 1)) return true;
            map[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

bool same_degree_multiset(const Graph& a, const Graph& b) {
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

} // namespace

bool for_each_graph_isomorphism(const Graph& a, const Graph& b,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    if (a.n != b.n || a.edges.size() != b.edges.size() || !same_degree_multiset(a, b))
        return false;
    IsoSearch s{a, b, visit, signatures(a), signatures(b),
                std::vector<int>(static_cast<std::size_t>(a.n), -1),
                std::vector<bool>(static_cast<std::size_t>(b.n), false)};
    s.extend(0);
    return s.stopped;
}

std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b) {
    std::optional<std::vector<int>> found;
    for_each_graph_isomorphism(a, b, [&](const std::vector<int>& m) {
        found = m;
        return true;
    });
    return found;
}

namespace {

Graph graph_from_incidence(const VertexFacetIncidence& vfi) {
    // two vertices are adjacent exactly when the facets containing both
    // intersect in just that pair
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vfi.n; ++u)
        for (int v = u + 1; v < vfi.n; ++v) {
            VertexSet pair;
            pair.insert(u);
            pair.insert(v);
            if (vfi.intersection_of_facets_containing(pair) == pair) edges.emplace_back(u, v);
        }
    return Graph(vfi.n, std::move(edges));
}

std::vector<int> sorted_sizes(const std::vector<VertexSet>& sets) {
    std::vector<int> s;
    s.reserve(sets.size());
    for (const VertexSet& f : sets) s.push_back(f.count());
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

std::optional<std::vector<int>> are_equivalent(const VertexFacetIncidence& a,
                                               const VertexFacetIncidence& b) {
    if (a.d != b.d || a.n != b.n || a.facets.size() != b.facets.size()) return std::nullopt;
    if (sorted_sizes(a.facets) != sorted_sizes(b.facets)) return std::nullopt;

    Graph ga = graph_from_incidence(a);
    Graph gb = graph_from_incidence(b);

    std::vector<VertexSet> fb_sorted = b.facets;
    std::sort(fb_sorted.begin(), fb_sorted.end());

    std::optional<std::vector<int>> found;
    for_each_graph_isomorphism(ga, gb, [&](const std::vector<int>& m) {
        std::vector<VertexSet> mapped;
        mapped.reserve(a.facets.size());
        for (const VertexSet& f : a.facets) {
            VertexSet img;
            for (int v : f) img.insert(m[static_cast<std::size_t>(v)]);
            mapped.push_back(img);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != fb_sorted) return false;
        found = m;
        return true;
    });
    return found;
}

bool skeletons_isomorphic(const Skeleton& a, const Skeleton& b) {
    if (a.k != b.k)
        throw Error(errc::rank_mismatch, "skeleta of rank " + std::to_string(a.k) + " and " +
                                             std::to_string(b.k));
    auto count_rank = [](const Skeleton& s, int r) {
        int c = 0;
        for (const Face& f : s.faces)
            if (f.rank == r) ++c;
        return c;
    };
    for (int r = 0; r <= a.k; ++r)
        if (count_rank(a, r) != count_rank(b, r)) return false;

    int na = count_rank(a, 0), nb = count_rank(b, 0);
    std::vector<std::pair<int, int>> ea, eb;
    auto edges_of = [](const Skeleton& s) {
        std::vector<std::pair<int, int>> e;
        for (const Face& f : s.faces)
            if (f.rank == 1) {
                auto vs = f.verts.to_vector();
                e.emplace_back(vs[0], vs[1]);
            }
        return e;
    };
    ea = edges_of(a);
    eb = edges_of(b);
    Graph ga(na, ea), gb(nb, eb);

    std::vector<std::pair<int, VertexSet>> fb_faces;
    for (const Face& f : b.faces) fb_faces.emplace_back(f.rank, f.verts);
    std::sort(fb_faces.begin(), fb_faces.end());

    return for_each_graph_isomorphism(ga, gb, [&](const std::vector<int>& m) {
        std::vector<std::pair<int, VertexSet>> mapped;
        mapped.reserve(a.faces.size());
        for (const Face& f : a.faces) {
            VertexSet img;
            for (int v : f.verts) img.insert(m[static_cast<std::size_t>(v)]);
            mapped.emplace_back(f.rank, img);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == fb_faces;
    });
}

} // namespace polyrec
