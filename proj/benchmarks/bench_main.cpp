#include <benchmark/benchmark.h>

#include <random>

#include "minimalnets/bounds.hpp"
#include "minimalnets/enumerator.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/minimality.hpp"
#include "minimalnets/quad_builder.hpp"
#include "minimalnets/relax.hpp"

using namespace minimalnets;

static void BM_BuildHn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_hn(n));
}
BENCHMARK(BM_BuildHn)->Arg(12)->Arg(30)->Arg(60);

static void BM_CheckMinimality(benchmark::State& state) {
    const auto g = build_hn(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_minimality(g));
}
BENCHMARK(BM_CheckMinimality)->Arg(30)->Arg(60);

static void BM_FindCycles(benchmark::State& state) {
    const auto g = build_hn(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_cycles(g));
}
BENCHMARK(BM_FindCycles)->Arg(18)->Arg(30);

static void BM_AllCycles(benchmark::State& state) {
    const auto g = build_hn(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_cycles(g));
}
BENCHMARK(BM_AllCycles)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_VerifyRecursion(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_recursion(60));
}
BENCHMARK(BM_VerifyRecursion);

static void BM_Arrangement(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(arrangement_to_graph(build_arrangement(m, 1)));
}
BENCHMARK(BM_Arrangement)->Arg(6)->Arg(12)->Arg(24);

static void BM_Census(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_census(n));
}
BENCHMARK(BM_Census)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_RelaxPerturbed(benchmark::State& state) {
    const auto exact = build_hn(static_cast<int>(state.range(0))).to_float();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> noise(-0.2, 0.2);
    std::vector<Vertex> vs = exact.vertices();
    for (auto& v : vs) {
        if (v.kind == VertexKind::Internal) std::get<Vec2>(v.pos) += Vec2{noise(rng), noise(rng)};
    }
    const auto problem = make_relax_problem(PlaneGraph::build(vs, exact.edges(), CoordinateMode::Float));
    for (auto _ : state) benchmark::DoNotOptimize(minimize_length(problem));
}
BENCHMARK(BM_RelaxPerturbed)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
