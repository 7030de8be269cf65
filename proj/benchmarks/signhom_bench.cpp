#include <benchmark/benchmark.h>

#include <random>

#include "signhom/chromatic.hpp"
#include "signhom/coloring.hpp"
#include "signhom/constructions.hpp"
#include "signhom/generate.hpp"
#include "signhom/hom.hpp"
#include "signhom/isomorphism.hpp"
#include "signhom/properties.hpp"

namespace {

using namespace signhom;

// Random sparse graphs into SP_9*; state.range(0) is the order.
void BM_FindHom2ecSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const SignedGraph g = random_signature(random_connected_cubic(n, rng), rng);
  const SignedGraph t = build_gadget(GadgetId::kSP9Star).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_hom_2ec(g, t));
}
BENCHMARK(BM_FindHom2ecSparse)->Arg(16)->Arg(64)->Arg(256);

// A failing search: alternating 6-cycle into CANDIDATE5 has to be refuted.
void BM_FindHom2ecRefute(benchmark::State& state) {
  std::vector<Sign> s;
  for (int i = 0; i < 6; ++i) s.push_back(i % 2 ? Sign::kNegative : Sign::kPositive);
  const SignedGraph c6 = make_cycle(s);
  const SignedGraph t = build_gadget(GadgetId::kCandidate5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_hom_2ec(c6, t));
}
BENCHMARK(BM_FindHom2ecRefute);

void BM_ChromaticSignedClique6(benchmark::State& state) {
  const SignedGraph g = build_gadget(GadgetId::kClique6).graph;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_signed(g));
}
BENCHMARK(BM_ChromaticSignedClique6)->Unit(benchmark::kMillisecond);

void BM_ColorMaxdeg3Cubic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  const SignedGraph g = random_signature(random_connected_cubic(n, rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(color_maxdeg3(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ColorMaxdeg3Cubic)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PkMinimumTromp(benchmark::State& state) {
  const SignedGraph g = build_tr(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(p_k_minimum(g, 3));
}
BENCHMARK(BM_PkMinimumTromp)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

void BM_AutomorphismsPaley(benchmark::State& state) {
  const SignedGraph g = build_sp(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(BM_AutomorphismsPaley)->Arg(9)->Arg(13)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
