// Serial reference kernels against their OpenMP versions, and direct against
// modular elimination.

#include <benchmark/benchmark.h>

#include "orelim/modres.hpp"
#include "orelim/random.hpp"

namespace {

using namespace orelim;

struct ChainFixture {
  FieldPtr k = FieldCtx::create(2, 24);
  Automorphism s{k, 1};
  std::vector<LinearizedOp> chain;
  std::vector<FieldElem> points;

  explicit ChainFixture(std::size_t n_points) {
    Rng rng(1);
    for (int i = 0; i < 6; ++i) chain.emplace_back(random_ore(s, 3, rng, true));
    for (std::size_t i = 0; i < n_points; ++i) points.push_back(random_elem(*k, rng));
  }
};

void BM_ChainSerial(benchmark::State& state) {
  ChainFixture fx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_chain_serial(fx.chain, fx.points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ChainParallel(benchmark::State& state) {
  ChainFixture fx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_chain(fx.chain, fx.points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Moore(benchmark::State& state) {
  ChainFixture fx(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(moore_matrix(fx.s, fx.points, 24, threads));
}

std::vector<OreMatrix> det_inputs() {
  auto k = FieldCtx::create(2, 8);
  Automorphism s(k, 1);
  Rng rng(2);
  std::vector<OreMatrix> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(random_matrix(s, 5, 3, rng));
  return ms;
}

void BM_DetSerial(benchmark::State& state) {
  const auto ms = det_inputs();
  for (auto _ : state)
    for (const auto& m : ms) benchmark::DoNotOptimize(dieudonne_det(m));
}

void BM_DetBatch(benchmark::State& state) {
  const auto ms = det_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(dieudonne_det_batch(ms));
}

std::pair<BivarOrePoly, BivarOrePoly> elimination_input(int degree) {
  auto k = FieldCtx::create(2, 8);
  Automorphism s1(k, 1), s2(k, 3);
  Rng rng(3 + static_cast<std::uint64_t>(degree));
  return {random_bivar(s1, s2, degree, degree, degree, rng),
          random_bivar(s1, s2, degree, degree, degree, rng)};
}

void BM_ResDirect(benchmark::State& state) {
  const auto [f, g] = elimination_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(res_x2_direct(f, g));
}

void BM_ResModular(benchmark::State& state) {
  const auto [f, g] = elimination_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(res_x2_modular(f, g));
}

}  // namespace

BENCHMARK(BM_ChainSerial)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_ChainParallel)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_Moore)->Args({1 << 12, 1})->Args({1 << 12, 0})->UseRealTime();
BENCHMARK(BM_DetSerial);
BENCHMARK(BM_DetBatch)->UseRealTime();
BENCHMARK(BM_ResDirect)->DenseRange(1, 3);
BENCHMARK(BM_ResModular)->DenseRange(1, 3);

BENCHMARK_MAIN();
