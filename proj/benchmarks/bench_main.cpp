#include <benchmark/benchmark.h>

#include "fsc/birkhoff.hpp"
#include "fsc/fracops.hpp"
#include "fsc/linsolve.hpp"
#include "fsc/problems.hpp"
#include "fsc/quadrature.hpp"

using namespace fsc;

static void BM_GaussJacobi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_jacobi(n, {-0.8, 0.8}));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_BasisVandermonde(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = gauss_jacobi(n, {-0.9, 0.9}).nodes;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_basis(0.9, x));
    }
}
BENCHMARK(BM_BasisVandermonde)->RangeMultiplier(4)->Range(16, 1024);

static void BM_BasisClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto rule = gauss_jacobi(n, {-0.8, 0.8});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_basis_gj(0.8, rule));
    }
}
BENCHMARK(BM_BasisClosedForm)->RangeMultiplier(4)->Range(16, 1024);

static void BM_AssembleIvp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = example1_spec();
    const Scheme scheme = state.range(1) == 0 ? Scheme::fsc : Scheme::pfsc;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(spec, n, scheme));
    }
}
BENCHMARK(BM_AssembleIvp)->ArgsProduct({{64, 256, 1024}, {0, 1}});

static void BM_AssembleBvp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = example2_spec();
    const Scheme scheme = state.range(1) == 0 ? Scheme::fsc : Scheme::pfsc;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(spec, n, scheme));
    }
}
BENCHMARK(BM_AssembleBvp)->ArgsProduct({{64, 256, 1024}, {0, 1}});

static void BM_Cond2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sys = assemble(example1_spec(), n, Scheme::pfsc);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cond2(sys.matrix));
    }
}
BENCHMARK(BM_Cond2)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

static void BM_BicgstabPfsc(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sys = assemble(example2_spec(), n, Scheme::pfsc);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicgstab(sys.matrix, sys.rhs, 1e-11));
    }
}
BENCHMARK(BM_BicgstabPfsc)->RangeMultiplier(4)->Range(64, 1024);

static void BM_LuSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sys = assemble(example2_spec(), n, Scheme::pfsc);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lu_solve(sys.matrix, sys.rhs));
    }
}
BENCHMARK(BM_LuSolve)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK_MAIN();
