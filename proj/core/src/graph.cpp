#include "polyrec/graph.hpp"

#include <algorithm>
#include <string>

namespace polyrec {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 0 || n > 64) throw Error(errc::bad_index, "vertex count out of range");
    std::sort(edges.begin(), edges.end());
    adj.assign(static_cast<std::size_t>(n), VertexSet{});
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
            throw Error(errc::bad_index, "edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        if (e > 0 && edges[e - 1] == edges[e])
            throw Error(errc::bad_index,
                        "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v});
    if (it == edges.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges.begin());
}

Graph Graph::induced(VertexSet s) const {
    std::vector<int> relabel(static_cast<std::size_t>(n), -1);
    int k = 0;
    for (int v : s) relabel[static_cast<std::size_t>(v)] = k++;
    std::vector<std::pair<int, int>> sub;
    for (auto [a, b] : edges)
        if (s.contains(a) && s.contains(b))
            sub.emplace_back(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]);
    return Graph(k, std::move(sub));
}

PolytopeStats stats(const Graph& g, int d) {
    if (d < 2) throw Error(errc::bad_dimension, "dimension must be at least 2, got " + std::to_string(d));
    PolytopeStats s;
    s.d = d;
    s.degrees.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        int deg = g.degree(v);
        if (deg < d)
            throw Error(errc::degree_too_low,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                            " < d = " + std::to_string(d));
        s.degrees.push_back(deg);
        s.xi += deg - d;
        if (deg > d) s.nonsimple.insert(v);
    }
    return s;
}

namespace {

// max number of internally vertex-disjoint s-t paths within sub, capped at
// `cap`: unit-capacity max flow on the split-vertex digraph (v_in = 2v,
// v_out = 2v+1)
int disjoint_paths(const Graph& g, VertexSet sub, int s, int t, int cap) {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(2 * g.n));
    auto add = [&](int a, int b, int c) {
        adj[static_cast<std::size_t>(a)].push_back(
            {b, c, static_cast<int>(adj[static_cast<std::size_t>(b)].size())});
        adj[static_cast<std::size_t>(b)].push_back(
            {a, 0, static_cast<int>(adj[static_cast<std::size_t>(a)].size()) - 1});
    };
    for (int v : sub) add(2 * v, 2 * v + 1, v == s || v == t ? cap : 1);
    for (auto [a, b] : g.edges) {
        if (!sub.contains(a) || !sub.contains(b)) continue;
        add(2 * a + 1, 2 * b, cap);
        add(2 * b + 1, 2 * a, cap);
    }
    int src = 2 * s, dst = 2 * t + 1;
    int flow = 0;
    while (flow < cap) {
        std::vector<int> pv(adj.size(), -1), pe(adj.size(), -1);
        std::vector<int> queue{src};
        pv[static_cast<std::size_t>(src)] = src;
        for (std::size_t qi = 0; qi < queue.size() && pv[static_cast<std::size_t>(dst)] < 0; ++qi) {
            int v = queue[qi];
            const auto& arcs = adj[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < arcs.size(); ++i) {
                int w = arcs[i].to;
                if (arcs[i].cap <= 0 || pv[static_cast<std::size_t>(w)] >= 0) continue;
                pv[static_cast<std::size_t>(w)] = v;
                pe[static_cast<std::size_t>(w)] = static_cast<int>(i);
                queue.push_back(w);
            }
        }
        if (pv[static_cast<std::size_t>(dst)] < 0) break;
        for (int v = dst; v != src; v = pv[static_cast<std::size_t>(v)]) {
            int u = pv[static_cast<std::size_t>(v)];
            Arc& a = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(pe[static_cast<std::size_t>(v)])];
            a.cap -= 1;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)].cap += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool connectivity_at_least(const Graph& g, VertexSet sub, int k) {
    if (k <= 0) return true;
    int m = sub.count();
    // K_m is (m-1)-connected, so small sets qualify only when complete
    bool complete = true;
    for (int u : sub)
        for (int v : sub)
            if (u < v && !g.has_edge(u, v)) complete = false;
    if (complete) return m - 1 >= k;
    if (m <= k) return false;
    // Menger: enough to bound disjoint paths between non-adjacent pairs
    for (int u : sub)
        for (int v : sub)
            if (u < v && !g.has_edge(u, v) && disjoint_paths(g, sub, u, v, k) < k)
                return false;
    return true;
}

bool balinski_check(const Graph& g, int d) {
    return connectivity_at_least(g, VertexSet::full(g.n), d);
}

} // namespace polyrec
