#include <benchmark/benchmark.h>

#include "esgames/fixtures.hpp"

using namespace esgames;

namespace {

void BM_Configurations(benchmark::State& state) {
  const GamePtr g = token_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations(*g->es));
  state.SetLabel(std::to_string(g->es->configurations().size()) + " configurations");
}
BENCHMARK(BM_Configurations)->DenseRange(2, 5);

void BM_Automorphisms(benchmark::State& state) {
  const GamePtr g = token_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(*g->es));
}
BENCHMARK(BM_Automorphisms)->DenseRange(2, 4);

void BM_BangGame(benchmark::State& state) {
  const GamePtr a = pairs_game();
  for (auto _ : state) benchmark::DoNotOptimize(bang_game(*a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BangGame)->Arg(2)->Arg(3);

void BM_ValidateStrategy(benchmark::State& state) {
  const Strategy s = token_strategy(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_strategy(s));
}
BENCHMARK(BM_ValidateStrategy)->DenseRange(2, 4);

void BM_UniformCopycat(benchmark::State& state) {
  const GamePtr g = token_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_copycat(g));
}
BENCHMARK(BM_UniformCopycat)->DenseRange(1, 3);

void BM_ValidateUniformCopycat(benchmark::State& state) {
  const UniformStrategy u = uniform_copycat(token_game(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(validate_uniform(u));
}
BENCHMARK(BM_ValidateUniformCopycat)->DenseRange(1, 2);

void BM_SearchUniform(benchmark::State& state) {
  const Strategy s = token_strategy(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(search_uniform_structure(s));
}
BENCHMARK(BM_SearchUniform)->Args({1, 2})->Args({2, 2})->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_TcgFromGame(benchmark::State& state) {
  const GamePtr g = token_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tcg_from_game(*g));
}
BENCHMARK(BM_TcgFromGame)->DenseRange(2, 3);

void BM_SimStrategy(benchmark::State& state) {
  const UniformStrategy u = uniform_copycat(pairs_game());
  for (auto _ : state) benchmark::DoNotOptimize(validate_sim_strategy(to_sim_strategy(u)));
}
BENCHMARK(BM_SimStrategy);

}  // namespace

BENCHMARK_MAIN();
