#include <benchmark/benchmark.h>

#include "piblocks/defect.hpp"

using namespace piblocks;

namespace {

Perm cyc(int degree, const std::vector<std::vector<int>>& cycles) {
  return Perm::from_cycles(degree, cycles);
}

GroupPtr s6() {
  return make_group(6, {cyc(6, {{1, 2}}), cyc(6, {{1, 2, 3, 4, 5, 6}})});
}

void BM_SchreierSims_S6(benchmark::State& state) {
  for (auto _ : state) {
    GroupPtr g = s6();
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_SchreierSims_S6);

void BM_ConjugacyClasses_S6(benchmark::State& state) {
  for (auto _ : state) {
    GroupPtr g = s6();
    benchmark::DoNotOptimize(g->classes().size());
  }
}
BENCHMARK(BM_ConjugacyClasses_S6);

void BM_CharacterTable_S4(benchmark::State& state) {
  GroupPtr g = make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  g->classes();
  for (auto _ : state) {
    CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees);
  }
}
BENCHMARK(BM_CharacterTable_S4);

void BM_CharacterTable_C30(benchmark::State& state) {
  GroupPtr g = make_group(10, {cyc(10, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9, 10}})});
  g->classes();
  for (auto _ : state) {
    CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees);
  }
}
BENCHMARK(BM_CharacterTable_C30);

void BM_PBlocks_S4(benchmark::State& state) {
  GroupPtr g = make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  CharacterTable t = character_table(g);
  for (auto _ : state) {
    auto blocks = p_blocks(t, 2);
    benchmark::DoNotOptimize(blocks.size());
  }
}
BENCHMARK(BM_PBlocks_S4);

void BM_DefectGroups_S4(benchmark::State& state) {
  for (auto _ : state) {
    Workspace ws;
    GroupPtr g = ws.canonical(
        make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})}));
    PrimeSet pi({2, 3});
    for (const PiBlock& b : ws.pi_blocks_of(g, pi))
      benchmark::DoNotOptimize(defect_group(ws, g, pi, b).order);
  }
}
BENCHMARK(BM_DefectGroups_S4);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
