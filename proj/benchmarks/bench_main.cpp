#include <benchmark/benchmark.h>

#include "bruhat/heaps.hpp"
#include "bruhat/lgraph.hpp"
#include "bruhat/localize.hpp"

using namespace bruhat;

namespace {

void BM_RootClosureE8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs = RootSystem::from_name("E8");
    benchmark::DoNotOptimize(rs.num_positive_roots());
  }
}
BENCHMARK(BM_RootClosureE8);

void BM_BruhatLeq(benchmark::State& state) {
  RootSystem b3 = RootSystem::from_name("B3");
  auto all = all_elements(b3);
  size_t i = 0;
  for (auto _ : state) {
    const WeylElt& v = all[i % all.size()];
    const WeylElt& w = all[(i * 7 + 3) % all.size()];
    benchmark::DoNotOptimize(bruhat_leq(v, w));
    ++i;
  }
}
BENCHMARK(BM_BruhatLeq);

void BM_PathSumIsotropic(benchmark::State& state) {
  RootSystem b3 = RootSystem::from_name("B3");
  ParabolicSet P = ParabolicSet::parse("1,3", 3);
  WeylElt id = WeylElt::identity(b3);
  WeylElt w = WeylElt::from_word(b3, parse_word("2 1 3 2", 3));
  LGraph g = build_lgraph_standard(id, w, P);
  for (auto _ : state) benchmark::DoNotOptimize(path_sum(g).total.to_string());
}
BENCHMARK(BM_PathSumIsotropic);

void BM_EqMultFullFlag(benchmark::State& state) {
  RootSystem b3 = RootSystem::from_name("B3");
  ParabolicSet B;
  WeylElt id = WeylElt::identity(b3);
  WeylElt w0 = WeylElt::from_word(b3, parse_word("1 2 1 3 2 1 3 2 3", 3));
  for (auto _ : state) benchmark::DoNotOptimize(eq_mult_richardson(id, w0, B).to_string());
}
BENCHMARK(BM_EqMultFullFlag);

void BM_ExcitedDiagrams(benchmark::State& state) {
  RootSystem a9 = RootSystem::from_name("A9");
  WeylElt w = WeylElt::from_word(a9, parse_word("2 1 3 2 5 8 7 6 9 8 7", 9));
  WeylElt v = WeylElt::from_word(a9, parse_word("2 8 7", 9));
  WeightVec pi = parse_weight("w2+w7", 9);
  Heap hw = heap_of_word(a9, w.word());
  Diagram f = filter_of(v, hw, pi);
  for (auto _ : state) benchmark::DoNotOptimize(excited_diagrams(f, hw).size());
}
BENCHMARK(BM_ExcitedDiagrams);

void BM_CountReducedWords(benchmark::State& state) {
  RootSystem a9 = RootSystem::from_name("A9");
  WeylElt w = WeylElt::from_word(a9, parse_word("2 1 3 2 5 4 3 8 7 6 5 4 9 8 7 6 5", 9));
  for (auto _ : state) benchmark::DoNotOptimize(count_reduced_words(w));
}
BENCHMARK(BM_CountReducedWords);

void BM_SmlrTableA2(benchmark::State& state) {
  RootSystem a2 = RootSystem::from_name("A2");
  for (auto _ : state) {
    SmlrSession session(a2, ParabolicSet{});
    auto reps = min_reps(a2, ParabolicSet{});
    for (const WeylElt& u : reps)
      for (const WeylElt& v : reps)
        for (const WeylElt& w : reps) benchmark::DoNotOptimize(session.coeff(u, v, w).is_zero());
  }
}
BENCHMARK(BM_SmlrTableA2);

}  // namespace

BENCHMARK_MAIN();
