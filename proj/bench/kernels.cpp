// Parallel kernels against their serial reference paths.

#include "slt/fixtures.hpp"
#include "slt/opalg.hpp"
#include "slt/tensor_maps.hpp"

#include <benchmark/benchmark.h>

using namespace slt;

namespace {

std::vector<Subspace> product_generators() {
    const ProjectionLattice l = fixtures::axes(3);
    const ProjectionLattice m = fixtures::two_atom2();
    std::vector<Subspace> gens;
    for (const auto& a : l.elements())
        for (const auto& b : m.elements()) gens.push_back(tensor(a, b));
    return gens;
}

void closure(benchmark::State& state, Exec exec) {
    const auto gens = product_generators();
    for (auto _ : state) benchmark::DoNotOptimize(lattice_closure(6, gens, 512, exec));
}

void closure_reference(benchmark::State& state) {
    const auto gens = product_generators();
    for (auto _ : state) benchmark::DoNotOptimize(lattice_closure_reference(6, gens, 512));
}

void alg(benchmark::State& state, Exec exec) {
    const ProjectionLattice p = tensor_lattice(fixtures::axes(3), fixtures::two_atom2()).product;
    for (auto _ : state) benchmark::DoNotOptimize(alg_of(p, exec));
}

void alg_reference(benchmark::State& state) {
    const ProjectionLattice p = tensor_lattice(fixtures::axes(3), fixtures::two_atom2()).product;
    for (auto _ : state) benchmark::DoNotOptimize(alg_of_reference(p));
}

void distributivity_table(benchmark::State& state) {
    const auto elements = tensor_lattice(fixtures::two_atom2(), fixtures::two_atom2()).product.elements();
    for (auto _ : state) benchmark::DoNotOptimize(ProjectionLattice::from_elements(4, elements));
}

void distributivity_reference(benchmark::State& state) {
    const ProjectionLattice p = tensor_lattice(fixtures::two_atom2(), fixtures::two_atom2()).product;
    for (auto _ : state) benchmark::DoNotOptimize(is_distributive_reference(p));
}

} // namespace

BENCHMARK_CAPTURE(closure, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_reference)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(alg, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(alg, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK(alg_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(distributivity_table)->Unit(benchmark::kMillisecond);
BENCHMARK(distributivity_reference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
