#include <benchmark/benchmark.h>

#include "gcm3/search.hpp"

namespace {

void BM_GenerateRoots(benchmark::State& state) {
    for (auto _ : state) {
        auto roots = gcm3::generate_roots(state.range(0));
        benchmark::DoNotOptimize(roots);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GenerateRoots)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_EnumerateTriples(benchmark::State& state) {
    for (auto _ : state) {
        for (int wall = 0; wall < 3; ++wall) {
            auto ts = gcm3::enumerate_triples(wall);
            benchmark::DoNotOptimize(ts);
        }
    }
}
BENCHMARK(BM_EnumerateTriples);

void BM_SolveTwists(benchmark::State& state) {
    for (auto _ : state) {
        auto sols = gcm3::solve_twists(2, 4, 2);
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(BM_SolveTwists);

void BM_SolveWeyl(benchmark::State& state) {
    auto triples = gcm3::enumerate_triples(0);
    gcm3::TwistVector ones(std::vector<gcm3::Int>{1, 1, 1});
    for (auto _ : state) {
        for (const auto& t : triples) {
            auto w = gcm3::solve_weyl(t, ones);
            benchmark::DoNotOptimize(w);
        }
    }
    state.SetItemsProcessed(state.iterations() * triples.size());
}
BENCHMARK(BM_SolveWeyl);

void BM_ExtendTriangle(benchmark::State& state) {
    const auto& tri = gcm3::Triangle::get();
    const gcm3::GramForm& g = gcm3::GramForm::triangle();
    gcm3::ChamberTriple t{tri.walls[0], tri.walls[1], tri.walls[2],
                          -g.inner(tri.walls[0].coords(), tri.walls[1].coords()),
                          -g.inner(tri.walls[0].coords(), tri.walls[2].coords()),
                          -g.inner(tri.walls[1].coords(), tri.walls[2].coords()), 1};
    gcm3::TwistVector ones(std::vector<gcm3::Int>{1, 1, 1});
    for (auto _ : state) {
        auto c = gcm3::extend_polygon(gcm3::make_seed(t, ones));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ExtendTriangle);

void BM_Pipeline(benchmark::State& state) {
    gcm3::PipelineConfig cfg;
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = gcm3::run_pipeline(cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
