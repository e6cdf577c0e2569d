// OpenMP kernels against their serial references.

#include "polychrome/checks.hpp"
#include "polychrome/coloring.hpp"
#include "polychrome/distance.hpp"

#include <benchmark/benchmark.h>

using namespace polychrome;

namespace {

Torus square(benchmark::State& state) { return Torus({state.range(0), state.range(0)}); }

std::vector<VertexSet> sources(const Torus& t) {
    const auto n = t.side(0);
    return {VertexSet::from_box(t, Box{{n / 4, n / 4}, {n / 4 + 7, n / 4 + 7}}),
            VertexSet::from_box(t, Box{{n / 2 + 3, n / 2}, {n / 2 + 20, n / 2 + 5}})};
}

Labeling template_labeling(const Torus& t) {
    const CubeLabeling a(2, {0, 1, 2, 0});
    const auto K = VertexSet::full(t);
    Labeling c(t, 3);
    for (Index v = 0; v < t.size(); ++v) c[v] = template_color(a, K, v);
    return c;
}

// range(1) is the cap; 0 stands for an exact field.
int cap_of(benchmark::State& state) { return state.range(1) == 0 ? -1 : static_cast<int>(state.range(1)); }

void BM_DistanceField(benchmark::State& state) {
    const auto t = square(state);
    const auto groups = sources(t);
    for (auto _ : state) benchmark::DoNotOptimize(separable_distance_field(t, groups, cap_of(state)));
    state.SetItemsProcessed(state.iterations() * t.size());
}

void BM_DistanceFieldSerialBfs(benchmark::State& state) {
    const auto t = square(state);
    const auto groups = sources(t);
    for (auto _ : state) benchmark::DoNotOptimize(serial::distance_field_bfs(t, groups, cap_of(state)));
    state.SetItemsProcessed(state.iterations() * t.size());
}

void BM_Polychromatic(benchmark::State& state) {
    const auto t = square(state);
    const auto c = template_labeling(t);
    for (auto _ : state) benchmark::DoNotOptimize(is_polychromatic(c, 3));
    state.SetItemsProcessed(state.iterations() * t.size());
}

void BM_PolychromaticSerial(benchmark::State& state) {
    const auto t = square(state);
    const auto c = template_labeling(t);
    for (auto _ : state) benchmark::DoNotOptimize(serial::is_polychromatic(c, 3));
    state.SetItemsProcessed(state.iterations() * t.size());
}

}  // namespace

BENCHMARK(BM_DistanceField)->ArgsProduct({{256, 1024}, {32, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DistanceFieldSerialBfs)->ArgsProduct({{256, 1024}, {32, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Polychromatic)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PolychromaticSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
