#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "nearfact/group.hpp"
#include "nearfact/mate.hpp"
#include "nearfact/search.hpp"
#include "nearfact/walk_matrix.hpp"

using namespace nearfact;

namespace {

GroupSubset z199_example() {
    static GroupSpec g = GroupSpec::parse("Z199");
    return GroupSubset::from_indices(g, {0, 1, 2, 3, 4, 195, 196, 197, 198});
}

void BM_mate_dense_z199(benchmark::State& state) {
    GroupSpec g = GroupSpec::parse("Z199");
    GroupSubset a = z199_example();
    for (auto _ : state) benchmark::DoNotOptimize(compute_mate_dense(g, a, 1));
}
BENCHMARK(BM_mate_dense_z199)->Unit(benchmark::kMillisecond);

void BM_mate_sparse_z199(benchmark::State& state) {
    GroupSpec g = GroupSpec::parse("Z199");
    GroupSubset a = z199_example();
    for (auto _ : state) benchmark::DoNotOptimize(compute_mate_sparse(g, a, 1));
}
BENCHMARK(BM_mate_sparse_z199)->Unit(benchmark::kMillisecond);

void BM_walk_matrix_build(benchmark::State& state) {
    GroupSpec g = GroupSpec::parse("Z199");
    GroupSubset a = z199_example();
    for (auto _ : state) benchmark::DoNotOptimize(WalkMatrix(g, a));
}
BENCHMARK(BM_walk_matrix_build);

void BM_verify_z199(benchmark::State& state) {
    GroupSpec g = GroupSpec::parse("Z199");
    GroupSubset a = z199_example();
    GroupSubset b = *compute_mate_sparse(g, a, 1).mate;
    for (auto _ : state) benchmark::DoNotOptimize(verify(g, a, b, 1));
}
BENCHMARK(BM_verify_z199);

void BM_symmetric_enumeration(benchmark::State& state) {
    GroupSpec g = GroupSpec::parse("Z2xZ4xZ9");
    auto size = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto stream = make_candidate_stream(g, size, true, true);
        std::uint64_t n = 0;
        while (stream->next()) ++n;
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_symmetric_enumeration)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
