#include <benchmark/benchmark.h>

#include "polyrec/catalogue.hpp"
#include "polyrec/lattice.hpp"
#include "polyrec/orientation.hpp"
#include "polyrec/reconstruct.hpp"

using namespace polyrec;

static void BM_build_lattice_prism5(benchmark::State& state) {
    VertexFacetIncidence vfi = simplicial_prism(5);
    for (auto _ : state) benchmark::DoNotOptimize(build_lattice(vfi));
}
BENCHMARK(BM_build_lattice_prism5);

static void BM_build_lattice_pentasm5(benchmark::State& state) {
    VertexFacetIncidence vfi = pentasm(5);
    for (auto _ : state) benchmark::DoNotOptimize(build_lattice(vfi));
}
BENCHMARK(BM_build_lattice_pentasm5);

static void BM_enumerate_orientations_prism3(benchmark::State& state) {
    Graph g = graph_of(build_lattice(simplicial_prism(3)));
    for (auto _ : state) benchmark::DoNotOptimize(count_acyclic_orientations(g));
}
BENCHMARK(BM_enumerate_orientations_prism3);

static void BM_enumerate_orientations_cube(benchmark::State& state) {
    Graph g = graph_of(build_lattice(prism_over(polygon(4))));
    for (auto _ : state) benchmark::DoNotOptimize(count_acyclic_orientations(g));
}
BENCHMARK(BM_enumerate_orientations_cube);

static void BM_reconstruct_prism4(benchmark::State& state) {
    Graph g = graph_of(build_lattice(simplicial_prism(4)));
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(g, 4));
}
BENCHMARK(BM_reconstruct_prism4);

static void BM_reconstruct_pentasm4(benchmark::State& state) {
    Graph g = graph_of(build_lattice(pentasm(4)));
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(g, 4));
}
BENCHMARK(BM_reconstruct_pentasm4);

static void BM_planar_facets_pentasm3(benchmark::State& state) {
    Graph g = graph_of(build_lattice(pentasm(3)));
    for (auto _ : state) benchmark::DoNotOptimize(planar_facets(g));
}
BENCHMARK(BM_planar_facets_pentasm3);

BENCHMARK_MAIN();
