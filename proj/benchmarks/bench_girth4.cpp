#include <benchmark/benchmark.h>

#include "girth4/construction.hpp"
#include "girth4/graph.hpp"
#include "girth4/planarity.hpp"
#include "girth4/search.hpp"
#include "girth4/verification.hpp"

namespace {

void BM_GirthChainedPart(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    girth4::Graph g = girth4::part_graph(girth4::build_case_4k(k), 0);
    for (auto _ : state) benchmark::DoNotOptimize(girth4::girth(g));
}
BENCHMARK(BM_GirthChainedPart)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GirthComplete(benchmark::State& state) {
    girth4::Graph g = girth4::complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(girth4::girth(g));
}
BENCHMARK(BM_GirthComplete)->Arg(16)->Arg(32)->Arg(64);

void BM_PlanarityDecision(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    girth4::Graph g = girth4::part_graph(girth4::build_case_4k(k), 0);
    for (auto _ : state) benchmark::DoNotOptimize(girth4::is_planar(g));
}
BENCHMARK(BM_PlanarityDecision)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_KuratowskiWitness(benchmark::State& state) {
    girth4::Graph g = girth4::complete_graph(8);
    for (auto _ : state) benchmark::DoNotOptimize(girth4::is_planar(g, true));
}
BENCHMARK(BM_KuratowskiWitness);

void BM_Construction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(girth4::decompose(n, "fixtures"));
}
BENCHMARK(BM_Construction)->Arg(12)->Arg(24)->Arg(48)->Arg(60);

void BM_Verify(benchmark::State& state) {
    girth4::Decomposition d = girth4::decompose(static_cast<int>(state.range(0)), "fixtures");
    for (auto _ : state) benchmark::DoNotOptimize(girth4::verify(d));
}
BENCHMARK(BM_Verify)->Arg(12)->Arg(24)->Arg(48)->Arg(60);

void BM_SearchK6(benchmark::State& state) {
    girth4::SearchConfig cfg;
    cfg.n = 6;
    cfg.parts = static_cast<int>(state.range(0));
    cfg.girth = 4;
    cfg.node_budget = std::uint64_t{1} << 40;
    cfg.time_budget_seconds = 600.0;
    for (auto _ : state) benchmark::DoNotOptimize(girth4::search_decomposition(cfg));
}
BENCHMARK(BM_SearchK6)->Arg(2)->Arg(3);

void BM_SearchK7(benchmark::State& state) {
    girth4::SearchConfig cfg;
    cfg.n = 7;
    cfg.parts = 3;
    cfg.girth = 4;
    cfg.node_budget = std::uint64_t{1} << 40;
    cfg.time_budget_seconds = 600.0;
    for (auto _ : state) benchmark::DoNotOptimize(girth4::search_decomposition(cfg));
}
BENCHMARK(BM_SearchK7);

void BM_RamseyK6(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(girth4::ramsey_triangle_check(6));
}
BENCHMARK(BM_RamseyK6);

} // namespace

BENCHMARK_MAIN();
