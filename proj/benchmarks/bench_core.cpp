#include <benchmark/benchmark.h>

#include "hrl/cliques.hpp"
#include "hrl/density.hpp"
#include "hrl/random.hpp"

namespace {

hrl::Hypergraph3 bench_host(int n, double p) {
    return hrl::sample_uniform_3graph(n, p, hrl::RngSpec{20250101, 0});
}

void BM_TriangleCount(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = hrl::VertexPartition::intervals(n, 3);
    hrl::Triad triad = hrl::Triad::complete(parts.parts[0], parts.parts[1], parts.parts[2], n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hrl::triangle_count(triad));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_TriangleCount)->Arg(30)->Arg(60)->Arg(120)->Complexity();

void BM_MaxLocalDensity(benchmark::State& state) {
    hrl::Hypergraph3 k = hrl::linear_clique3(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hrl::max_local_density(k));
    }
}
BENCHMARK(BM_MaxLocalDensity)->Arg(4)->Arg(5)->Arg(6);

void BM_CliqueSearch(benchmark::State& state) {
    hrl::Hypergraph3 host = bench_host(static_cast<int>(state.range(0)), 0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hrl::contains_linear_clique(host, 3));
    }
}
BENCHMARK(BM_CliqueSearch)->Arg(12)->Arg(16)->Arg(20);

void BM_CopyEnumeration(benchmark::State& state) {
    hrl::Hypergraph3 host = bench_host(static_cast<int>(state.range(0)), 0.35);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hrl::all_linear_clique_copies(host, 3));
    }
}
BENCHMARK(BM_CopyEnumeration)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
