// Parallel kernels against their single-threaded references.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "lsg/classical.hpp"
#include "lsg/constructions.hpp"
#include "lsg/coset_table.hpp"
#include "lsg/game.hpp"
#include "lsg/presentation.hpp"

namespace {

// Ring of overlapping three-variable equations; every variable appears twice.
lsg::LinearSystem ring_system(std::size_t n) {
    std::vector<std::vector<lsg::Residue>> m(n, std::vector<lsg::Residue>(n, 0));
    std::vector<lsg::Residue> rhs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        m[i][(i + 1) % n] = 1;
        m[i][(i + 3) % n] = 1;
    }
    rhs[0] = 1;
    return lsg::LinearSystem(2, m, rhs);
}

lsg::Strategy magic_square_regular() {
    const auto ms = lsg::magic_square();
    const auto pres = lsg::build_solution_group(ms);
    auto result = lsg::coset_enumerate(pres, 100000);
    return lsg::regular_rep_strategy(std::get<lsg::Finite>(result).table, pres, ms);
}

void BM_ClassicalParallel(benchmark::State& state) {
    const auto sys = ring_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsg::classical_optimum(sys, std::uint64_t{1} << 30));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_ClassicalSerial(benchmark::State& state) {
    const auto sys = ring_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsg::classical_optimum_reference(sys, std::uint64_t{1} << 30));
}

void BM_GameValueParallel(benchmark::State& state) {
    const auto ms = lsg::magic_square();
    const auto st = magic_square_regular();
    for (auto _ : state) benchmark::DoNotOptimize(lsg::game_value(st, ms));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_GameValueSerial(benchmark::State& state) {
    const auto ms = lsg::magic_square();
    const auto st = magic_square_regular();
    for (auto _ : state) benchmark::DoNotOptimize(lsg::game_value_reference(st, ms));
}

}  // namespace

BENCHMARK(BM_ClassicalParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GameValueParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GameValueSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
