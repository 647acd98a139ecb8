#include <benchmark/benchmark.h>

#include "crepant/catalog.hpp"
#include "crepant/chartable.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/juniorenum.hpp"
#include "crepant/lattice.hpp"
#include "crepant/search.hpp"

using namespace crepant;

namespace {

void BM_CloseGroupSL23(benchmark::State& state) {
    const auto& gens = build_sl23().generators;
    for (auto _ : state) benchmark::DoNotOptimize(close_group(gens, 1000).order());
}
BENCHMARK(BM_CloseGroupSL23);

void BM_CharacterTableQ16(benchmark::State& state) {
    FiniteMatrixGroup g = close_group(build_quaternion(16).generators, 1000);
    for (auto _ : state) benchmark::DoNotOptimize(character_table(g).chars.size());
}
BENCHMARK(BM_CharacterTableQ16);

void BM_EnumerateBlocks(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_blocks().size());
}
BENCHMARK(BM_EnumerateBlocks);

void BM_ClassifyFourfold(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify_fourfold_elements().size());
}
BENCHMARK(BM_ClassifyFourfold);

void BM_FactorCyclotomic(benchmark::State& state) {
    IntPoly p = cyclotomic_poly(15) * cyclotomic_poly(16) * cyclotomic_poly(7);
    for (auto _ : state) benchmark::DoNotOptimize(factor_into_cyclotomics(p).has_value());
}
BENCHMARK(BM_FactorCyclotomic);

void BM_LatticeRow7(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_lattice_row(7, {1, 2, 4}).status.size());
}
BENCHMARK(BM_LatticeRow7);

void BM_FourfoldRepPredicate(benchmark::State& state) {
    FiniteMatrixGroup g = close_group(build_semidirect_quaternion(5, 16, true).generators, 100);
    for (auto _ : state) benchmark::DoNotOptimize(admits_fourfold_rep(g));
}
BENCHMARK(BM_FourfoldRepPredicate);

}  // namespace

BENCHMARK_MAIN();
