#include <benchmark/benchmark.h>

#include "origami/elliptic.hpp"
#include "origami/intersect.hpp"
#include "origami/origami.hpp"
#include "origami/veech.hpp"
#include "origami/weierstrass.hpp"

namespace {

using namespace origami;

// Canonical relabeling of a 50-square surface.
void BM_CanonicalForm(benchmark::State& state) {
    const Origami d = construct_D(make_grid_point(2, 1, 5));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_pair(d));
}
BENCHMARK(BM_CanonicalForm);

// Full orbit/stabilizer computation for a three-square surface (index 3).
void BM_VeechOrbitSmall(benchmark::State& state) {
    const Origami o = make_origami(Permutation::from_cycles(3, {{0, 1}}),
                                   Permutation::from_cycles(3, {{0, 2}}));
    for (auto _ : state) benchmark::DoNotOptimize(veech_group(o).index);
}
BENCHMARK(BM_VeechOrbitSmall);

// Orbit of a 50-square branched double cover (index 18).
void BM_VeechOrbitCover(benchmark::State& state) {
    const Origami d = construct_D(make_grid_point(2, 1, 5));
    for (auto _ : state) benchmark::DoNotOptimize(veech_group(d).index);
}
BENCHMARK(BM_VeechOrbitCover);

// Exact division polynomial at level 12 (degree 70, rational coefficients).
void BM_DivisionPolynomial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(division_polynomial(12).degree());
}
BENCHMARK(BM_DivisionPolynomial);

// Holonomy search for the branched double cover on the 7x7 grid.
void BM_ConstructCover(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(construct_D(make_grid_point(3, 1, 7)).size());
}
BENCHMARK(BM_ConstructCover);

// One lattice p-function evaluation at a generic point.
void BM_WeierstrassP(benchmark::State& state) {
    const Complex z(0.31, 0.17);
    for (auto _ : state) benchmark::DoNotOptimize(wp(z));
}
BENCHMARK(BM_WeierstrassP);

} // namespace

BENCHMARK_MAIN();
