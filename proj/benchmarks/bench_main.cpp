#include <benchmark/benchmark.h>

#include <vector>

#include "ordvec/coherence.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/gallery.hpp"
#include "ordvec/lp.hpp"
#include "ordvec/random_instances.hpp"

using namespace ordvec;

namespace {

void BM_SimplexRandomLp(benchmark::State& state) {
  Sampler rng(1);
  std::vector<lp::LinearProgram> lps;
  for (int i = 0; i < 64; ++i) lps.push_back(random_lp(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(lps[i++ % lps.size()]));
}
BENCHMARK(BM_SimplexRandomLp);

void BM_BruteForceRandomLp(benchmark::State& state) {
  Sampler rng(1);
  std::vector<lp::LinearProgram> lps;
  for (int i = 0; i < 64; ++i) lps.push_back(random_lp(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lp::brute_force_solve(lps[i++ % lps.size()]));
}
BENCHMARK(BM_BruteForceRandomLp);

void BM_NormDelta(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  GalleryInstance g = make_delta_instance(n);
  Sampler rng(2);
  RVector v = rng.vector(n, -5, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(norm_p(g.space, v));
}
BENCHMARK(BM_NormDelta)->DenseRange(2, 10, 4);

void BM_NormRandom(benchmark::State& state) {
  Sampler rng(3);
  std::vector<std::pair<MajorizedSpace, RVector>> cases;
  for (int i = 0; i < 32; ++i) {
    RandomInstance inst = random_instance(rng);
    cases.emplace_back(inst.space, random_in_ideal(rng, inst.space));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, v] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(norm_p(s, v));
  }
}
BENCHMARK(BM_NormRandom);

void BM_CoherenceF2Ball(benchmark::State& state) {
  GalleryInstance g = make_f2_ball_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherent(g.space));
}
BENCHMARK(BM_CoherenceF2Ball)->DenseRange(2, 4);

void BM_OpNormRandom(benchmark::State& state) {
  Sampler rng(4);
  std::vector<std::pair<MajorizedSpace, Functional>> cases;
  for (int i = 0; i < 32; ++i) {
    RandomInstance inst = random_instance(rng);
    cases.emplace_back(inst.space, rng.vector(inst.space.dim(), -3, 3));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, psi] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(op_norm(s, psi));
  }
}
BENCHMARK(BM_OpNormRandom);

}  // namespace

BENCHMARK_MAIN();
