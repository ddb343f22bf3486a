#include "polyrec/reconstruct.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "orientation_detail.hpp"
#include "polyrec/isomorphism.hpp"
#include "polyrec/lattice.hpp"
#include "polyrec/structure.hpp"

namespace polyrec {

const char* method_name(Method m) {
    switch (m) {
    case Method::simple:
        return "simple";
    case Method::pyramid_peel:
        return "pyramid-peel";
    case Method::excess:
        return "excess";
    case Method::small_vertex:
        return "small-vertex";
    }
    return "?";
}

namespace {

struct Budget {
    std::uint64_t cap;
    std::atomic<std::uint64_t> used{0};

    bool charge() { return used.fetch_add(1, std::memory_order_relaxed) + 1 <= cap; }
};

[[noreturn]] void throw_budget(const Budget& b) {
    throw Error(errc::budget_exceeded,
                "more than " + std::to_string(b.cap) + " orientations examined");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("POLYREC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

enum class Objective { kalai, f_r };

// Branch-and-bound over the free edges of a constrained orientation search.
// Both objectives have cheap admissible lower bounds: deciding an edge never
// lowers an indegree, 2^k is increasing, and the f_R vertex cost
// [k = d-1] + d[k = d] is nondecreasing in k for k <= d.
class Search {
public:
    Search(const Graph& g, int d, const OrientationConstraints& cons) : g_(g), d_(d) {
        auto [mask, dir] = detail::forced_bits(g, cons);
        std::size_t n = static_cast<std::size_t>(g.n);
        out_.assign(n, VertexSet{});
        indeg_.assign(n, 0);
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            if (!(mask >> e & 1)) {
                free_edges_.push_back(e);
                continue;
            }
            auto [a, b] = g.edges[static_cast<std::size_t>(e)];
            int from = dir >> e & 1 ? b : a, to = dir >> e & 1 ? a : b;
            out_[static_cast<std::size_t>(from)].insert(to);
            ++indeg_[static_cast<std::size_t>(to)];
        }
        for (int v = 0; v < g.n; ++v) {
            kal_ += std::uint64_t{1} << indeg_[static_cast<std::size_t>(v)];
            if (g.degree(v) == d) fr_ += cost(indeg_[static_cast<std::size_t>(v)]);
        }
    }

    int free_count() const { return static_cast<int>(free_edges_.size()); }

    // false when the prefix directions already close a cycle
    bool seed_prefix(std::uint64_t bits, int p) {
        for (int i = 0; i < p; ++i) {
            auto [a, b] = edge_at(i);
            int from = bits >> i & 1 ? b : a, to = bits >> i & 1 ? a : b;
            if (reaches(to, from)) return false;
            apply(from, to);
        }
        return true;
    }

    std::uint64_t minimise(Objective obj, std::uint64_t incumbent, Budget& budget,
                           std::atomic<std::uint64_t>* shared, bool& overflow,
                           int start_depth = 0) {
        obj_ = obj;
        minimising_ = true;
        best_ = incumbent;
        shared_ = shared;
        budget_ = &budget;
        overflow_ = false;
        found_ = false;
        dfs(start_depth);
        overflow = overflow_;
        return best_;
    }

    // a completion with objective exactly target; when sink_set is nonempty it
    // must also have a unique sink inside sink_set and that sink must be simple
    bool find_target(Objective obj, std::uint64_t target, VertexSet sink_set, Budget& budget) {
        obj_ = obj;
        minimising_ = false;
        target_ = target;
        sink_ = sink_set;
        budget_ = &budget;
        overflow_ = false;
        found_ = false;
        dfs(0);
        if (overflow_) throw_budget(budget);
        return found_;
    }

private:
    std::pair<int, int> edge_at(int depth) const {
        return g_.edges[static_cast<std::size_t>(free_edges_[static_cast<std::size_t>(depth)])];
    }

    int cost(int k) const { return k == d_ - 1 ? 1 : k >= d_ ? d_ : 0; }

    bool reaches(int src, int dst) const {
        VertexSet seen;
        seen.insert(src);
        std::vector<int> stack{src};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == dst) return true;
            for (int w : out_[static_cast<std::size_t>(v)])
                if (!seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        return false;
    }

    void apply(int from, int to) {
        out_[static_cast<std::size_t>(from)].insert(to);
        int k = indeg_[static_cast<std::size_t>(to)]++;
        kal_ += std::uint64_t{1} << k;
        if (g_.degree(to) == d_) fr_ += cost(k + 1) - cost(k);
    }

    void undo(int from, int to) {
        out_[static_cast<std::size_t>(from)].erase(to);
        int k = --indeg_[static_cast<std::size_t>(to)];
        kal_ -= std::uint64_t{1} << k;
        if (g_.degree(to) == d_) fr_ -= cost(k + 1) - cost(k);
    }

    std::uint64_t lower_bound(int depth) const {
        if (obj_ == Objective::f_r) return fr_;
        std::uint64_t s = kal_;
        for (int i = depth; i < free_count(); ++i) {
            auto [a, b] = edge_at(i);
            s += std::min(std::uint64_t{1} << indeg_[static_cast<std::size_t>(a)],
                          std::uint64_t{1} << indeg_[static_cast<std::size_t>(b)]);
        }
        return s;
    }

    bool sink_ok() const {
        if (sink_.empty()) return true;
        int sink = -1;
        for (int v : sink_) {
            if (!(out_[static_cast<std::size_t>(v)] & sink_).empty()) continue;
            if (sink >= 0) return false;
            sink = v;
        }
        return sink >= 0 && g_.degree(sink) == d_;
    }

    void dfs(int depth) {
        std::uint64_t limit = minimising_
                                  ? (shared_ ? shared_->load(std::memory_order_relaxed) : best_)
                                  : target_;
        if (lower_bound(depth) > limit) return;
        if (depth == free_count()) {
            if (!budget_->charge()) {
                overflow_ = true;
                return;
            }
            std::uint64_t value = obj_ == Objective::kalai ? kal_ : fr_;
            if (minimising_) {
                if (value < best_) best_ = value;
                if (shared_) {
                    std::uint64_t cur = shared_->load(std::memory_order_relaxed);
                    while (value < cur &&
                           !shared_->compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
                    }
                }
            } else if (value == target_ && sink_ok()) {
                found_ = true;
            }
            return;
        }
        auto [a, b] = edge_at(depth);
        for (int c = 0; c <= 1 && !found_ && !overflow_; ++c) {
            int from = c ? b : a, to = c ? a : b;
            if (reaches(to, from)) continue; // directing from->to would close a cycle
            apply(from, to);
            dfs(depth + 1);
            undo(from, to);
        }
    }

    const Graph& g_;
    int d_;
    std::vector<int> free_edges_;
    std::vector<VertexSet> out_;
    std::vector<int> indeg_;
    std::uint64_t kal_ = 0;
    std::uint64_t fr_ = 0;

    Objective obj_ = Objective::kalai;
    bool minimising_ = true;
    std::uint64_t best_ = ~std::uint64_t{0};
    std::uint64_t target_ = 0;
    VertexSet sink_;
    std::atomic<std::uint64_t>* shared_ = nullptr;
    Budget* budget_ = nullptr;
    bool overflow_ = false;
    bool found_ = false;
};

std::uint64_t run_min(const Graph& g, int d, Objective obj, const OrientationConstraints& cons,
                      std::uint64_t incumbent, Budget& budget, int threads) {
    Search probe(g, d, cons);
    int k = probe.free_count();
    if (threads <= 1 || k < 10) {
        bool overflow = false;
        std::uint64_t m = probe.minimise(obj, incumbent, budget, nullptr, overflow);
        if (overflow) throw_budget(budget);
        return m;
    }
    int p = 1;
    while ((1 << p) < 4 * threads && p + 1 < std::min(k, 11)) ++p;
    std::atomic<std::uint64_t> best{incumbent};
    std::atomic<std::uint32_t> next{0};
    std::atomic<bool> overflow{false};
    auto worker = [&] {
        while (!overflow.load(std::memory_order_relaxed)) {
            std::uint32_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= (std::uint32_t{1} << p)) break;
            Search s(g, d, cons);
            if (!s.seed_prefix(i, p)) continue;
            bool o = false;
            s.minimise(obj, best.load(std::memory_order_relaxed), budget, &best, o, p);
            if (o) overflow.store(true, std::memory_order_relaxed);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (overflow.load()) throw_budget(budget);
    return best.load();
}

std::vector<VertexSet> simple_impl(const Graph& g, int d, Budget& budget, int threads) {
    PolytopeStats st = stats(g, d);
    if (st.xi != 0)
        throw Error(errc::not_simple, std::to_string(st.nonsimple.count()) +
                                          " vertices of degree above " + std::to_string(d));

    std::vector<int> identity(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) identity[static_cast<std::size_t>(v)] = v;
    std::uint64_t incumbent = kalai_objective(orientation_from_order(g, identity));
    std::uint64_t min = run_min(g, d, Objective::kalai, {}, incumbent, budget, threads);

    std::vector<VertexSet> facets;
    for (const VertexSet& s : feasible_supersets(g, d, VertexSet{})) {
        OrientationConstraints cons;
        cons.forced_initial = s;
        if (Search(g, d, cons).find_target(Objective::kalai, min, VertexSet{}, budget))
            facets.push_back(s);
    }
    return facets;
}

// orientation order: r first, then h, then the rest (ascending within each)
std::vector<int> layered_order(const Graph& g, VertexSet r, VertexSet h) {
    std::vector<int> order;
    for (int v : r) order.push_back(v);
    for (int v : h - r) order.push_back(v);
    for (int v : VertexSet::full(g.n) - h) order.push_back(v);
    return order;
}

OrientationConstraints witness_constraints(const Graph& g, VertexSet r, VertexSet h) {
    OrientationConstraints cons;
    cons.forced_initial = h;
    for (auto [a, b] : g.edges) {
        bool ar = r.contains(a), br = r.contains(b);
        if (ar == br) continue;
        int rv = ar ? a : b, ov = ar ? b : a;
        if (h.contains(ov)) cons.forced_edges.emplace_back(rv, ov);
    }
    return cons;
}

// minimum of the f_R objective over the orientation class A_r, realised as
// the minimum over witness sets h of the constrained searches
std::uint64_t min_fr_over_class(const Graph& g, int d, VertexSet r,
                                const std::vector<VertexSet>& candidates, Budget& budget) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const VertexSet& h : candidates) {
        OrientationConstraints cons = witness_constraints(g, r, h);
        Orientation warm = orientation_from_order(g, layered_order(g, r, h));
        std::uint64_t incumbent = static_cast<std::uint64_t>(
            f_R_objective(indegree_histogram(warm, d), d));
        best = std::min(best, run_min(g, d, Objective::f_r, cons,
                                      std::min(best, incumbent), budget, 1));
    }
    return best;
}

// feasible supersets of r that are initial, with r initial inside, under some
// minimum-objective orientation with a unique simple sink in the set
std::vector<VertexSet> collect_min_witnesses(const Graph& g, int d, VertexSet r,
                                             const std::vector<VertexSet>& candidates,
                                             std::uint64_t target, Budget& budget) {
    std::vector<VertexSet> kept;
    for (const VertexSet& h : candidates) {
        OrientationConstraints cons = witness_constraints(g, r, h);
        if (Search(g, d, cons).find_target(Objective::f_r, target, h, budget))
            kept.push_back(h);
    }
    return kept;
}

std::vector<VertexSet> minimal_completions(const Graph& g, int d, const Frame& seed) {
    if (seed.root < 0 || seed.root >= g.n)
        throw Error(errc::bad_index, "frame root out of range");
    if (!seed.leaves.subset_of(g.adj[static_cast<std::size_t>(seed.root)]))
        throw Error(errc::bad_index, "frame leaves must be neighbours of the root");
    VertexSet base = seed.leaves;
    base.insert(seed.root);
    std::vector<VertexSet> minimals;
    for (const VertexSet& c : feasible_supersets(g, d, base)) {
        bool minimal = true;
        for (const VertexSet& m : minimals)
            if (m.subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) minimals.push_back(c);
    }
    return minimals;
}

std::optional<ReconstructionResult> validate_result(const Graph& g, int d, Method m,
                                                    std::vector<VertexSet> facets) {
    try {
        VertexFacetIncidence vfi(d, g.n, std::move(facets));
        FaceLattice lat = build_lattice(vfi);
        if (!(graph_of(lat) == g)) return std::nullopt;
        return ReconstructionResult{std::move(vfi), m, Certificate{true, true, true}};
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<VertexSet> excess_impl(const Graph& g, int d, Budget& budget, int threads) {
    (void)threads;
    if (d < 4) throw Error(errc::hypothesis_violated, "excess reconstruction needs d >= 4");
    NonsimpleCore core = nonsimple_core(g, d); // throws excess_too_large at xi >= d
    if (core.kind == CoreKind::empty)
        throw Error(errc::hypothesis_violated, "graph has no excess");
    if (core.kind == CoreKind::other)
        throw Error(errc::core_unrecognized, "nonsimple set matches no handled pattern");

    std::set<VertexSet> sure;
    std::vector<VertexSet> ambiguous;
    auto harvest = [&](const Frame& fr) {
        std::vector<VertexSet> mins = minimal_completions(g, d, fr);
        if (mins.size() == 1)
            sure.insert(mins[0]);
        else
            ambiguous.insert(ambiguous.end(), mins.begin(), mins.end());
    };

    // simple vertices' frames: each facet contains a simple vertex, and at
    // that vertex the facet is the completion of a degree-(d-1) frame
    for (int s = 0; s < g.n; ++s) {
        if (g.degree(s) != d) continue;
        for (int w : g.adj[static_cast<std::size_t>(s)]) {
            VertexSet leaves = g.adj[static_cast<std::size_t>(s)];
            leaves.erase(w);
            harvest(Frame{s, leaves});
        }
    }

    // frames rooted at core vertices give the facets that meet the core
    // without containing it
    if (core.kind == CoreKind::simplex_face) {
        for (int u : core.vertices)
            for (int v : core.vertices) {
                if (v == u) continue;
                VertexSet leaves = g.adj[static_cast<std::size_t>(u)];
                leaves.erase(v);
                harvest(Frame{u, leaves});
            }
    } else if (core.kind == CoreKind::quadrilateral) {
        for (int u : core.vertices)
            for (int v : g.adj[static_cast<std::size_t>(u)] & core.vertices) {
                VertexSet leaves = g.adj[static_cast<std::size_t>(u)];
                leaves.erase(v);
                harvest(Frame{u, leaves});
            }
    }

    // facets containing the core, via the minimum of the f_R objective
    std::vector<VertexSet> roots;
    if (core.kind == CoreKind::pair)
        for (int w : core.vertices) roots.push_back(VertexSet{w});
    else
        roots.push_back(core.vertices);
    for (const VertexSet& r : roots) {
        std::vector<VertexSet> candidates = feasible_supersets(g, d, r);
        if (candidates.empty()) continue;
        std::uint64_t min = min_fr_over_class(g, d, r, candidates, budget);
        for (const VertexSet& f : collect_min_witnesses(g, d, r, candidates, min, budget))
            sure.insert(f);
    }

    auto as_list = [](const std::set<VertexSet>& s) {
        return std::vector<VertexSet>(s.begin(), s.end());
    };
    if (validate_result(g, d, Method::excess, as_list(sure))) return as_list(sure);
    std::set<VertexSet> widened = sure;
    widened.insert(ambiguous.begin(), ambiguous.end());
    if (validate_result(g, d, Method::excess, as_list(widened))) return as_list(widened);
    throw Error(errc::validation_failed, "assembled facet classes do not round-trip");
}

bool connected_without(const Graph& g, VertexSet removed) {
    VertexSet rest = VertexSet::full(g.n) - removed;
    if (rest.empty()) return true;
    int start = rest.lowest();
    VertexSet seen;
    seen.insert(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[static_cast<std::size_t>(v)] & rest)
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen == rest;
}

} // namespace

std::vector<VertexSet> planar_facets(const Graph& g) {
    int n = g.n, m = static_cast<int>(g.edges.size());
    if (n >= 3 && m > 3 * n - 6)
        throw Error(errc::validation_failed, "too many edges for a planar graph");

    // peripheral cycle enumeration: grow induced paths from their smallest
    // vertex, close when the next vertex sees exactly the path ends
    std::vector<VertexSet> peripheral;
    std::vector<int> path;
    VertexSet inpath;
    std::function<void()> grow = [&] {
        int a = path.front();
        int last = path.back();
        for (int w : g.adj[static_cast<std::size_t>(last)]) {
            if (w <= a || inpath.contains(w)) continue;
            VertexSet hits = g.adj[static_cast<std::size_t>(w)] & inpath;
            VertexSet just_last{last};
            if (hits == just_last) {
                path.push_back(w);
                inpath.insert(w);
                grow();
                path.pop_back();
                inpath.erase(w);
            } else if (path.size() >= 2 && hits == (just_last | VertexSet{a}) &&
                       path[1] < w) {
                VertexSet cycle = inpath;
                cycle.insert(w);
                if (connected_without(g, cycle)) peripheral.push_back(cycle);
            }
        }
    };
    for (int a = 0; a < n; ++a) {
        path.assign(1, a);
        inpath = VertexSet{a};
        grow();
    }

    if (static_cast<int>(peripheral.size()) != 2 - n + m)
        throw Error(errc::validation_failed,
                    std::to_string(peripheral.size()) + " peripheral cycles against " +
                        std::to_string(2 - n + m) + " expected by the Euler relation");
    return peripheral;
}

VertexSet facet_completion(const Graph& g, int d, const Frame& seed) {
    std::vector<VertexSet> mins = minimal_completions(g, d, seed);
    if (mins.empty())
        throw Error(errc::no_completion, "no feasible superset of the frame");
    if (mins.size() > 1)
        throw Error(errc::ambiguous_completion,
                    std::to_string(mins.size()) + " incomparable minimal feasible supersets");
    return mins[0];
}

std::vector<VertexSet> simple_reconstruct(const Graph& g, int d, const ReconstructOptions& opt) {
    Budget budget{opt.max_orientations};
    return simple_impl(g, d, budget, resolve_threads(opt.threads));
}

std::vector<VertexSet> excess_reconstruct(const Graph& g, int d, const ReconstructOptions& opt) {
    Budget budget{opt.max_orientations};
    return excess_impl(g, d, budget, resolve_threads(opt.threads));
}

ReconstructOutcome reconstruct(const Graph& g, int d, const ReconstructOptions& opt) {
    if (!balinski_check(g, d))
        throw Error(errc::not_balinski,
                    "graph is not " + std::to_string(d) + "-connected");
    PolytopeStats st = stats(g, d);
    Budget budget{opt.max_orientations};
    int threads = resolve_threads(opt.threads);

    auto finish = [&](Method m, std::vector<VertexSet> facets) -> ReconstructOutcome {
        std::optional<ReconstructionResult> res = validate_result(g, d, m, std::move(facets));
        if (!res)
            throw Error(errc::validation_failed,
                        std::string(method_name(m)) + " facets do not round-trip");
        return *res;
    };

    if (st.xi == 0) return finish(Method::simple, simple_impl(g, d, budget, threads));

    if (st.nonsimple.count() <= d - 1) {
        int uni = -1;
        for (int v = 0; v < g.n && uni < 0; ++v)
            if (g.degree(v) == g.n - 1) uni = v;
        if (uni >= 0) {
            GraphPeel peel = peel_universal(g, uni);
            ReconstructOutcome inner = reconstruct(peel.base, d - 1, opt);
            if (const CoverageVerdict* verdict = std::get_if<CoverageVerdict>(&inner))
                return CoverageVerdict{false, verdict->reason, st.xi, st.nonsimple.count(), d,
                                       g.n};
            const ReconstructionResult& base = std::get<ReconstructionResult>(inner);
            std::vector<VertexSet> facets;
            VertexSet base_all;
            for (int v : peel.base_to_orig) base_all.insert(v);
            facets.push_back(base_all);
            for (const VertexSet& f : base.vfi.facets) {
                VertexSet lifted;
                for (int v : f) lifted.insert(peel.base_to_orig[static_cast<std::size_t>(v)]);
                lifted.insert(uni);
                facets.push_back(lifted);
            }
            return finish(Method::pyramid_peel, facets);
        }
    }

    if (st.xi <= d - 1 && d >= 4)
        return finish(Method::excess, excess_impl(g, d, budget, threads));

    if (d == 2) {
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) != 2)
                throw Error(errc::validation_failed, "no polygon has this graph");
        std::vector<VertexSet> facets;
        for (auto [a, b] : g.edges) facets.push_back(VertexSet{a, b});
        return finish(Method::small_vertex, facets);
    }
    if (d == 3) return finish(Method::small_vertex, planar_facets(g));

    std::string reason = st.xi == d                  ? "excess = d"
                         : st.nonsimple.count() >= d ? "nonsimple count >= d"
                                                     : "excess >= d";
    return CoverageVerdict{false, reason, st.xi, st.nonsimple.count(), d, g.n};
}

AmbiguityGroups find_graph_ambiguities(const std::vector<VertexFacetIncidence>& fixtures) {
    std::vector<Graph> graphs;
    graphs.reserve(fixtures.size());
    for (const VertexFacetIncidence& f : fixtures) graphs.push_back(graph_of(build_lattice(f)));

    AmbiguityGroups out;
    for (int i = 0; i < static_cast<int>(fixtures.size()); ++i) {
        bool placed = false;
        for (std::vector<int>& cls : out.graph_classes)
            if (graphs_isomorphic(graphs[static_cast<std::size_t>(cls[0])],
                                  graphs[static_cast<std::size_t>(i)])) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) out.graph_classes.push_back({i});
    }
    for (const std::vector<int>& cls : out.graph_classes) {
        std::vector<std::vector<int>> subs;
        for (int idx : cls) {
            bool placed = false;
            for (std::vector<int>& sub : subs)
                if (are_equivalent(fixtures[static_cast<std::size_t>(sub[0])],
                                   fixtures[static_cast<std::size_t>(idx)])) {
                    sub.push_back(idx);
                    placed = true;
                    break;
                }
            if (!placed) subs.push_back({idx});
        }
        out.lattice_classes.push_back(subs);
    }
    return out;
}

} // namespace polyrec
