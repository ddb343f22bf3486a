#include "polyrec/catalogue.hpp"

#include <algorithm>

namespace polyrec {

namespace {

struct FixtureData {
    int d;
    int n;
    std::vector<std::vector<int>> facets;
};

#include "catalogue_data.inc"

VertexFacetIncidence from_data(const FixtureData& fd) {
    return VertexFacetIncidence::from_lists(fd.d, fd.n, fd.facets);
}

} // namespace

VertexFacetIncidence simplex(int d) {
    if (d < 2) throw Error(errc::bad_dimension, "simplex needs d >= 2, got " + std::to_string(d));
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return VertexFacetIncidence::from_lists(d, d + 1, facets);
}

VertexFacetIncidence polygon(int m) {
    if (m < 3) throw Error(errc::bad_dimension, "polygon needs m >= 3, got " + std::to_string(m));
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m});
    return VertexFacetIncidence::from_lists(2, m, facets);
}

VertexFacetIncidence simplicial_prism(int d) {
    if (d < 2) throw Error(errc::bad_dimension, "prism needs d >= 2, got " + std::to_string(d));
    if (2 * d > 64) throw Error(errc::bad_dimension, "prism too large");
    std::vector<std::vector<int>> facets;
    std::vector<int> bottom, top;
    for (int i = 0; i < d; ++i) bottom.push_back(i);
    for (int i = 0; i < d; ++i) top.push_back(d + i);
    facets.push_back(bottom);
    facets.push_back(top);
    for (int skip = 0; skip < d; ++skip) {
        std::vector<int> f;
        for (int i = 0; i < d; ++i)
            if (i != skip) {
                f.push_back(i);
                f.push_back(d + i);
            }
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return VertexFacetIncidence::from_lists(d, 2 * d, facets);
}

VertexFacetIncidence prism_over(const VertexFacetIncidence& base) {
    if (2 * base.n > 64) throw Error(errc::invalid_base, "prism base too large");
    std::vector<VertexSet> facets;
    VertexSet bottom = VertexSet::full(base.n);
    VertexSet top;
    for (int v = 0; v < base.n; ++v) top.insert(base.n + v);
    facets.push_back(bottom);
    facets.push_back(top);
    for (const VertexSet& f : base.facets) {
        VertexSet vert;
        for (int v : f) {
            vert.insert(v);
            vert.insert(base.n + v);
        }
        facets.push_back(vert);
    }
    return VertexFacetIncidence(base.d + 1, 2 * base.n, std::move(facets));
}

VertexFacetIncidence pyramid_over(const VertexFacetIncidence& base) {
    if (base.n + 1 > 64) throw Error(errc::invalid_base, "pyramid base too large");
    int apex = base.n;
    std::vector<VertexSet> facets;
    facets.push_back(VertexSet::full(base.n)); // the base itself
    for (const VertexSet& f : base.facets) {
        VertexSet g = f;
        g.insert(apex);
        facets.push_back(g);
    }
    return VertexFacetIncidence(base.d + 1, base.n + 1, std::move(facets));
}

namespace {

// valid from d >= 2 (the d=2 instance is a quadrilateral); the public
// entry point keeps the d >= 3 precondition
VertexFacetIncidence bipyramid_core(int d) {
    std::vector<std::vector<int>> facets;
    for (int apex = d; apex <= d + 1; ++apex)
        for (int skip = 0; skip < d; ++skip) {
            std::vector<int> f;
            for (int v = 0; v < d; ++v)
                if (v != skip) f.push_back(v);
            f.push_back(apex);
            facets.push_back(std::move(f));
        }
    return VertexFacetIncidence::from_lists(d, d + 2, facets);
}

} // namespace

VertexFacetIncidence bipyramid_over_simplex(int d) {
    if (d < 3)
        throw Error(errc::bad_dimension, "bipyramid needs d >= 3, got " + std::to_string(d));
    return bipyramid_core(d);
}

VertexFacetIncidence pyramid_over_bipyramid(int d) {
    if (d < 3)
        throw Error(errc::bad_dimension,
                    "pyramid over bipyramid needs d >= 3, got " + std::to_string(d));
    return pyramid_over(bipyramid_core(d - 1));
}

VertexFacetIncidence pentasm(int d) {
    if (d < 3 || d > 5)
        throw Error(errc::bad_dimension, "pentasm data exists for d in {3,4,5}, got " +
                                             std::to_string(d));
    return from_data(kPentasmData[d - 3]);
}

VertexFacetIncidence tetragonal_antiwedge() { return from_data(kAntiwedgeData); }

VertexFacetIncidence table1(int i) {
    // published vertex-facet incidences of the four nonpyramidal 4-polytopes
    // with seven vertices; facet counts 9, 8, 8, 7
    static const std::vector<std::vector<std::vector<int>>> kTable = {
        {{2, 3, 4, 5, 6},
         {1, 3, 4, 5, 6},
         {1, 2, 5, 6},
         {1, 2, 4, 6},
         {1, 2, 3, 5},
         {0, 2, 3, 4},
         {0, 1, 3, 4},
         {0, 1, 2, 4},
         {0, 1, 2, 3}},
        {{2, 3, 4, 5, 6},
         {1, 3, 4, 5, 6},
         {0, 1, 2, 5, 6},
         {1, 2, 4, 6},
         {0, 2, 3, 5},
         {0, 1, 3, 5},
         {1, 2, 3, 4},
         {0, 1, 2, 3}},
        {{1, 2, 3, 4, 5, 6},
         {0, 3, 4, 5, 6},
         {0, 2, 5, 6},
         {0, 2, 4, 6},
         {0, 2, 3, 5},
         {0, 1, 3, 4},
         {0, 1, 2, 4},
         {0, 1, 2, 3}},
        {{2, 3, 4, 5, 6},
         {1, 3, 4, 5, 6},
         {0, 1, 2, 5, 6},
         {0, 1, 2, 3, 4},
         {1, 2, 4, 6},
         {0, 2, 3, 5},
         {0, 1, 3, 5}}};
    if (i < 1 || i > 4)
        throw Error(errc::bad_index, "table1 index must be 1..4, got " + std::to_string(i));
    return VertexFacetIncidence::from_lists(4, 7, kTable[static_cast<std::size_t>(i - 1)]);
}

std::vector<VertexFacetIncidence> seven_vertex_3polytopes() {
    std::vector<VertexFacetIncidence> out;
    for (const FixtureData& fd : kSevenVertexData) out.push_back(from_data(fd));
    return out;
}

namespace {

std::vector<FixtureRecord> build_registry() {
    std::vector<FixtureRecord> reg;
    auto add = [&](const std::string& name, VertexFacetIncidence vfi, FixtureSource src) {
        reg.push_back({name, std::move(vfi), src});
    };
    for (int d = 2; d <= 6; ++d)
        add("simplex-" + std::to_string(d), simplex(d), FixtureSource::constructed);
    for (int d = 2; d <= 5; ++d)
        add("prism-" + std::to_string(d), simplicial_prism(d), FixtureSource::constructed);
    add("pentagon", polygon(5), FixtureSource::constructed);
    add("cube-3", prism_over(polygon(4)), FixtureSource::constructed);

    VertexFacetIncidence base = polygon(5);
    for (int r = 1; r <= 3; ++r) {
        base = pyramid_over(base);
        add("pyr" + std::to_string(r) + "-pentagon", base, FixtureSource::constructed);
    }
    base = simplicial_prism(3);
    for (int r = 1; r <= 3; ++r) {
        base = pyramid_over(base);
        add("pyr" + std::to_string(r) + "-prism3", base, FixtureSource::constructed);
    }
    base = tetragonal_antiwedge();
    for (int r = 1; r <= 3; ++r) {
        base = pyramid_over(base);
        add("pyr" + std::to_string(r) + "-antiwedge", base, FixtureSource::constructed);
    }

    for (int d = 3; d <= 5; ++d) {
        add("bipyramid-" + std::to_string(d), bipyramid_over_simplex(d),
            FixtureSource::constructed);
        add("pyr-bipyramid-" + std::to_string(d), pyramid_over_bipyramid(d),
            FixtureSource::constructed);
        add("pentasm-" + std::to_string(d), pentasm(d), FixtureSource::derived);
    }
    add("antiwedge", tetragonal_antiwedge(), FixtureSource::derived);
    for (int i = 1; i <= 4; ++i)
        add("table1-" + std::to_string(i), table1(i), FixtureSource::tabulated);
    std::vector<VertexFacetIncidence> seven = seven_vertex_3polytopes();
    for (std::size_t i = 0; i < seven.size(); ++i)
        add("seven3poly-" + std::to_string(i + 1), seven[i], FixtureSource::derived);
    return reg;
}

} // namespace

const std::vector<FixtureRecord>& all_fixtures() {
    static const std::vector<FixtureRecord> reg = build_registry();
    return reg;
}

const FixtureRecord* find_fixture(const std::string& name) {
    for (const FixtureRecord& r : all_fixtures())
        if (r.name == name) return &r;
    return nullptr;
}

} // namespace polyrec
