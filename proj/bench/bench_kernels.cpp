// Parallel kernels against their serial references.
#include "delsarte/oracle.hpp"
#include "delsarte/verify.hpp"

#include <benchmark/benchmark.h>

using namespace delsarte;

namespace {

void verify_grid(benchmark::State& state, const char* suite)
{
    GridOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_verify_suite(suite, opts));
    state.SetLabel(opts.parallel ? "parallel" : "serial");
}

void BM_AffineGrid(benchmark::State& state) { verify_grid(state, "affine-optima"); }
void BM_Orthogonality(benchmark::State& state) { verify_grid(state, "orthogonality"); }

void BM_CliqueSearch(benchmark::State& state)
{
    const auto inst = build_instance(Family::Alternating, 2, 2, 5);
    CliqueOptions opts;
    opts.node_budget = 200'000;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto r = parallel ? max_code_bruteforce(inst, 2, opts) : max_code_bruteforce_serial(inst, 2, opts);
        benchmark::DoNotOptimize(r);
    }
    state.SetLabel(parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_AffineGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Orthogonality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
