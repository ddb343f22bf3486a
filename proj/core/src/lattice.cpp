#include "polyrec/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace polyrec {

std::vector<VertexSet> FaceLattice::faces_of_rank(int r) const {
    std::vector<VertexSet> out;
    for (const Face& f : faces)
        if (f.rank == r) out.push_back(f.verts);
    return out;
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> f(static_cast<std::size_t>(d), 0);
    for (const Face& face : faces)
        if (face.rank >= 0 && face.rank < d) ++f[static_cast<std::size_t>(face.rank)];
    return f;
}

int FaceLattice::face_index(VertexSet s) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].verts == s) return static_cast<int>(i);
    return -1;
}

FaceLattice build_lattice(const VertexFacetIncidence& vfi) {
    const int d = vfi.d;
    const VertexSet top = VertexSet::full(vfi.n);

    // closure of {facets, top} under pairwise intersection, plus the bottom
    std::set<VertexSet> closed(vfi.facets.begin(), vfi.facets.end());
    closed.insert(top);
    closed.insert(VertexSet{});
    std::vector<VertexSet> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const VertexSet& a : frontier)
            for (const VertexSet& f : vfi.facets) {
                VertexSet c = a & f;
                if (closed.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }

    // rank by longest chain from the bottom; process by increasing size
    std::vector<VertexSet> sets(closed.begin(), closed.end());
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    std::map<VertexSet, int> rank;
    for (const VertexSet& s : sets) {
        int r = -1;
        for (const auto& [t, rt] : rank)
            if (t != s && t.subset_of(s)) r = std::max(r, rt);
        rank[s] = s.empty() ? -1 : r + 1;
    }

    if (rank[top] != d)
        throw Error(errc::not_polytopal, "lattice rank " + std::to_string(rank[top]) +
                                             " does not match dimension " + std::to_string(d));

    // atoms must be the single vertices
    for (const VertexSet& s : sets) {
        if (rank[s] == 0 && s.count() != 1)
            throw Error(errc::not_polytopal, "atom with " + std::to_string(s.count()) + " vertices");
    }
    int atoms = 0;
    for (const VertexSet& s : sets)
        if (rank[s] == 0) ++atoms;
    if (atoms != vfi.n)
        throw Error(errc::not_polytopal, "only " + std::to_string(atoms) + " of " +
                                             std::to_string(vfi.n) + " vertices are faces");

    FaceLattice lat;
    lat.d = d;
    lat.n = vfi.n;
    std::sort(sets.begin(), sets.end(), [&](VertexSet a, VertexSet b) {
        return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
    });
    for (const VertexSet& s : sets) lat.faces.push_back({s, rank[s]});

    // covers: immediate containments; grading demands rank step one
    const int m = static_cast<int>(lat.faces.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const Face& lo = lat.faces[static_cast<std::size_t>(i)];
            const Face& hi = lat.faces[static_cast<std::size_t>(j)];
            if (!(lo.verts.subset_of(hi.verts)) || lo.verts == hi.verts) continue;
            bool cover = true;
            for (int k = 0; k < m && cover; ++k) {
                if (k == i || k == j) continue;
                const Face& mid = lat.faces[static_cast<std::size_t>(k)];
                if (lo.verts.subset_of(mid.verts) && mid.verts.subset_of(hi.verts) &&
                    mid.verts != lo.verts && mid.verts != hi.verts)
                    cover = false;
            }
            if (!cover) continue;
            if (hi.rank != lo.rank + 1)
                throw Error(errc::not_polytopal,
                            "lattice not graded: cover with rank step " + std::to_string(hi.rank - lo.rank));
            lat.covers.emplace_back(i, j);
        }

    // diamond condition: every interval of rank length 2 has exactly 2
    // interior elements
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Face& lo = lat.faces[static_cast<std::size_t>(i)];
            const Face& hi = lat.faces[static_cast<std::size_t>(j)];
            if (hi.rank != lo.rank + 2 || !lo.verts.subset_of(hi.verts)) continue;
            if (lo.verts == hi.verts) continue;
            int between = 0;
            for (int k = 0; k < m; ++k) {
                const Face& mid = lat.faces[static_cast<std::size_t>(k)];
                if (mid.rank == lo.rank + 1 && lo.verts.subset_of(mid.verts) &&
                    mid.verts.subset_of(hi.verts))
                    ++between;
            }
            if (between != 2)
                throw Error(errc::not_polytopal,
                            "diamond condition fails: interval with " + std::to_string(between) +
                                " interior elements");
        }

    return lat;
}

Graph graph_of(const FaceLattice& lat) {
    std::vector<std::pair<int, int>> edges;
    for (const Face& f : lat.faces)
        if (f.rank == 1) {
            auto vs = f.verts.to_vector();
            edges.emplace_back(vs[0], vs[1]);
        }
    return Graph(lat.n, std::move(edges));
}

Skeleton k_skeleton(const FaceLattice& lat, int k) {
    if (k < 0 || k > lat.d - 1)
        throw Error(errc::rank_out_of_range,
                    "skeleton rank " + std::to_string(k) + " outside 0.." + std::to_string(lat.d - 1));
    Skeleton s;
    s.k = k;
    for (const Face& f : lat.faces)
        if (f.rank >= 0 && f.rank <= k) s.faces.push_back(f);
    return s;
}

} // namespace polyrec
