#include "polyrec/orientation.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "orientation_detail.hpp"

namespace polyrec {

int Orientation::indegree(int v) const {
    int k = 0;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (directed(e).second == v) ++k;
    return k;
}

VertexSet Orientation::out_neighbours(int v) const {
    VertexSet out;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [from, to] = directed(e);
        if (from == v) out.insert(to);
    }
    return out;
}

bool Orientation::is_acyclic() const {
    std::vector<int> indeg(static_cast<std::size_t>(g.n), 0);
    std::vector<VertexSet> out(static_cast<std::size_t>(g.n));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [from, to] = directed(e);
        out[static_cast<std::size_t>(from)].insert(to);
        ++indeg[static_cast<std::size_t>(to)];
    }
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    return seen == g.n;
}

Orientation orientation_from_order(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw Error(errc::bad_index, "order must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < g.n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.n || pos[static_cast<std::size_t>(v)] != -1)
            throw Error(errc::bad_index, "order must list every vertex once");
        pos[static_cast<std::size_t>(v)] = i;
    }
    std::uint64_t dir = 0;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [a, b] = g.edges[static_cast<std::size_t>(e)];
        if (pos[static_cast<std::size_t>(b)] < pos[static_cast<std::size_t>(a)])
            dir |= std::uint64_t{1} << e;
    }
    return Orientation{g, dir};
}

namespace detail {

std::pair<std::uint64_t, std::uint64_t> forced_bits(const Graph& g,
                                                    const OrientationConstraints& c) {
    if (g.edges.size() > 64)
        throw Error(errc::degenerate_input, "orientation search limited to 64 edges");
    std::uint64_t mask = 0, dir = 0;
    auto force = [&](int from, int to) {
        int e = g.edge_index(from, to);
        if (e < 0)
            throw Error(errc::bad_index, "forced edge " + std::to_string(from) + "->" +
                                             std::to_string(to) + " not in graph");
        auto [lo, hi] = g.edges[static_cast<std::size_t>(e)];
        std::uint64_t bit = std::uint64_t{1} << e;
        std::uint64_t want = from == hi ? bit : 0;
        if ((mask & bit) && (dir & bit) != want)
            throw Error(errc::inconsistent_constraints, "edge " + std::to_string(lo) + "-" +
                                                            std::to_string(hi) +
                                                            " forced both ways");
        mask |= bit;
        dir |= want;
    };
    for (auto [from, to] : c.forced_edges) force(from, to);
    if (!c.forced_initial.empty()) {
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            auto [a, b] = g.edges[static_cast<std::size_t>(e)];
            bool ina = c.forced_initial.contains(a), inb = c.forced_initial.contains(b);
            if (ina == inb) continue;
            if (ina)
                force(a, b);
            else
                force(b, a);
        }
    }

    // the forced part alone must be acyclic
    std::vector<VertexSet> out(static_cast<std::size_t>(g.n));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (!(mask >> e & 1)) continue;
        auto [a, b] = g.edges[static_cast<std::size_t>(e)];
        if (dir >> e & 1)
            out[static_cast<std::size_t>(b)].insert(a);
        else
            out[static_cast<std::size_t>(a)].insert(b);
    }
    std::vector<int> indeg(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : out[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(w)];
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    if (seen != g.n)
        throw Error(errc::inconsistent_constraints, "forced edges contain a cycle");
    return {mask, dir};
}

} // namespace detail

AcyclicEnumerator::AcyclicEnumerator(const Graph& g, OrientationConstraints c) : g_(g) {
    std::tie(fixed_mask_, fixed_dir_) = detail::forced_bits(g_, c);
    out_.assign(static_cast<std::size_t>(g.n), VertexSet{});
    for (int e = 0; e < static_cast<int>(g_.edges.size()); ++e) {
        if (!(fixed_mask_ >> e & 1)) {
            free_edges_.push_back(e);
            continue;
        }
        auto [a, b] = g_.edges[static_cast<std::size_t>(e)];
        if (fixed_dir_ >> e & 1)
            out_[static_cast<std::size_t>(b)].insert(a);
        else
            out_[static_cast<std::size_t>(a)].insert(b);
    }
    choice_.assign(free_edges_.size(), -1);
    current_dir_ = fixed_dir_;
}

bool AcyclicEnumerator::creates_cycle(int from, int to) const {
    VertexSet seen;
    seen.insert(to);
    std::vector<int> stack{to};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == from) return true;
        for (int w : out_[static_cast<std::size_t>(v)])
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return false;
}

std::optional<Orientation> AcyclicEnumerator::next() {
    if (done_) return std::nullopt;
    const int k = static_cast<int>(free_edges_.size());

    auto undo_top = [&] {
        --depth_;
        int e = free_edges_[static_cast<std::size_t>(depth_)];
        auto [lo, hi] = g_.edges[static_cast<std::size_t>(e)];
        int from = choice_[static_cast<std::size_t>(depth_)] == 0 ? lo : hi;
        int to = choice_[static_cast<std::size_t>(depth_)] == 0 ? hi : lo;
        out_[static_cast<std::size_t>(from)].erase(to);
        current_dir_ &= ~(std::uint64_t{1} << e);
    };

    if (first_)
        first_ = false;
    else if (depth_ == 0) { // k == 0: the single fixed orientation was emitted
        done_ = true;
        return std::nullopt;
    } else
        undo_top();

    while (true) {
        if (depth_ == k) {
            ++produced_;
            return Orientation{g_, current_dir_};
        }
        int e = free_edges_[static_cast<std::size_t>(depth_)];
        auto [lo, hi] = g_.edges[static_cast<std::size_t>(e)];
        bool advanced = false;
        for (int c = choice_[static_cast<std::size_t>(depth_)] + 1; c <= 1 && !advanced; ++c) {
            int from = c == 0 ? lo : hi;
            int to = c == 0 ? hi : lo;
            if (creates_cycle(from, to)) continue;
            choice_[static_cast<std::size_t>(depth_)] = c;
            out_[static_cast<std::size_t>(from)].insert(to);
            if (c == 1) current_dir_ |= std::uint64_t{1} << e;
            ++depth_;
            advanced = true;
        }
        if (!advanced) {
            choice_[static_cast<std::size_t>(depth_)] = -1;
            if (depth_ == 0) {
                done_ = true;
                return std::nullopt;
            }
            undo_top();
        }
    }
}

std::uint64_t count_acyclic_orientations(const Graph& g) {
    AcyclicEnumerator en(g);
    while (en.next()) {
    }
    return en.produced();
}

bool is_good(const Orientation& o, const FaceLattice& lat, bool all_faces) {
    if (o.g.n != lat.n || !(o.g == graph_of(lat)))
        throw Error(errc::graph_mismatch, "orientation is not over the lattice graph");
    std::vector<VertexSet> out(static_cast<std::size_t>(o.g.n));
    for (int e = 0; e < static_cast<int>(o.g.edges.size()); ++e) {
        auto [from, to] = o.directed(e);
        out[static_cast<std::size_t>(from)].insert(to);
    }
    auto unique_sink = [&](VertexSet f) {
        int sinks = 0;
        for (int v : f)
            if ((out[static_cast<std::size_t>(v)] & f).empty() && ++sinks > 1) return false;
        return sinks == 1;
    };
    for (const Face& f : lat.faces) {
        if (all_faces ? f.rank < 1 : f.rank != lat.d - 1) continue;
        if (!unique_sink(f.verts)) return false;
    }
    return true;
}

IndegreeHistogram indegree_histogram(const Orientation& o, int d) {
    std::vector<int> indeg(static_cast<std::size_t>(o.g.n), 0);
    for (int e = 0; e < static_cast<int>(o.g.edges.size()); ++e)
        ++indeg[static_cast<std::size_t>(o.directed(e).second)];
    IndegreeHistogram h;
    h.counts.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int v = 0; v < o.g.n; ++v) {
        if (o.g.degree(v) != d) continue; // nonsimple vertices are not counted
        int k = indeg[static_cast<std::size_t>(v)];
        if (k >= static_cast<int>(h.counts.size())) h.counts.resize(static_cast<std::size_t>(k) + 1, 0);
        ++h.counts[static_cast<std::size_t>(k)];
    }
    return h;
}

int f_R_objective(const IndegreeHistogram& h, int d) { return h.at(d - 1) + d * h.at(d); }

std::uint64_t kalai_objective(const Orientation& o) {
    std::vector<int> indeg(static_cast<std::size_t>(o.g.n), 0);
    for (int e = 0; e < static_cast<int>(o.g.edges.size()); ++e)
        ++indeg[static_cast<std::size_t>(o.directed(e).second)];
    std::uint64_t sum = 0;
    for (int v = 0; v < o.g.n; ++v) sum += std::uint64_t{1} << indeg[static_cast<std::size_t>(v)];
    return sum;
}

bool is_feasible(const Graph& g, int d, VertexSet subset) {
    if (subset.empty()) return false;
    for (int v : subset)
        if (g.degree(v) == d && (g.adj[static_cast<std::size_t>(v)] & subset).count() != d - 1)
            return false;
    return connectivity_at_least(g, subset, d - 1);
}

bool is_initial(const Orientation& o, VertexSet subset) {
    for (int e = 0; e < static_cast<int>(o.g.edges.size()); ++e) {
        auto [from, to] = o.directed(e);
        if (subset.contains(to) && !subset.contains(from)) return false;
    }
    return true;
}

std::vector<VertexSet> feasible_supersets(const Graph& g, int d, VertexSet r) {
    int free = g.n - r.count();
    if (free > 26)
        throw Error(errc::degenerate_input,
                    "feasible-superset search over 2^" + std::to_string(free) + " subsets");
    std::uint64_t rest = VertexSet::full(g.n).bits() & ~r.bits();
    std::vector<VertexSet> out;
    std::uint64_t sub = 0;
    while (true) {
        VertexSet s(r.bits() | sub);
        if (!s.empty() && is_feasible(g, d, s)) out.push_back(s);
        if (sub == rest) break;
        sub = (sub - rest) & rest; // next submask of rest in increasing order
    }
    std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    return out;
}

std::optional<VertexSet> in_A_R(const Orientation& o, int d, VertexSet r) {
    for (int u : r)
        for (int v : r)
            if (u < v && !o.g.has_edge(u, v))
                throw Error(errc::r_not_clique, "vertices " + std::to_string(u) + "," +
                                                    std::to_string(v) + " not adjacent");
    for (const VertexSet& h : feasible_supersets(o.g, d, r)) {
        if (!is_initial(o, h)) continue;
        bool r_initial_inside = true;
        for (int e = 0; e < static_cast<int>(o.g.edges.size()) && r_initial_inside; ++e) {
            auto [from, to] = o.directed(e);
            if (r.contains(to) && !r.contains(from) && h.contains(from))
                r_initial_inside = false;
        }
        if (r_initial_inside) return h;
    }
    return std::nullopt;
}

} // namespace polyrec
