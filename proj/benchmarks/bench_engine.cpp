#include <benchmark/benchmark.h>

#include <filesystem>

#include "platlab/level_io.hpp"
#include "platlab/navgraph.hpp"
#include "platlab/pathmetrics.hpp"
#include "platlab/probability.hpp"
#include "platlab/trajectory.hpp"
#include "platlab/validation.hpp"

using namespace platlab;

namespace {

const std::filesystem::path kData = PLATLAB_BENCH_DATA_DIR;

Platform make(const char* id, double x, double y, double length) {
    Platform p;
    p.id = id;
    p.x = x;
    p.y = y;
    p.length = length;
    return p;
}

const Level& tower() {
    static const Level level = load_level(kData / "levels" / "tower.json");
    return level;
}

void BM_GenerateSimple(benchmark::State& state) {
    MovementConfig m;
    m.double_jump_enabled = state.range(0) != 0;
    const Platform s = make("s", 0, 0, 6);
    const Platform t = make("t", 12, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(generate_trajectories(s, t, m));
}
BENCHMARK(BM_GenerateSimple)->Arg(0)->Arg(1);

void BM_EstimateEdge(benchmark::State& state) {
    const MovementConfig m;
    const Platform s = make("s", 0, 0, 6);
    const Platform t = make("t", 12, 1, 3);
    const auto trajectories = generate_trajectories(s, t, m);
    SamplingConfig sampling;
    sampling.samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rng rng = make_substream(sampling.seed, {"bench"});
        benchmark::DoNotOptimize(estimate_edge(s, t, trajectories, {}, sampling, {}, m, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(trajectories.size()));
}
BENCHMARK(BM_EstimateEdge)->Arg(100)->Arg(1000);

void BM_BuildGraph(benchmark::State& state) {
    GraphOptions options;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(tower(), {}, {}, {}, options));
}
BENCHMARK(BM_BuildGraph)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PathReport(benchmark::State& state) {
    GraphOptions options;
    options.threads = 1;
    const auto graph = build_graph(tower(), {}, {}, {}, options);
    for (auto _ : state) benchmark::DoNotOptimize(build_path_report(graph, tower()));
}
BENCHMARK(BM_PathReport);

void BM_SuiteCell(benchmark::State& state) {
    const ScreenSuite suite = load_suite(kData / "screens" / "suite.json");
    const SamplingConfig sampling;
    for (auto _ : state) {
        double total = 0.0;
        for (const auto& screen : suite.screens) total += estimate_screen(screen, {}, sampling);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SuiteCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
