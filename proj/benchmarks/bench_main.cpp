#include <benchmark/benchmark.h>

#include "mondrian/filters.hpp"
#include "mondrian/oracle.hpp"
#include "mondrian/pieces.hpp"
#include "mondrian/pipeline.hpp"
#include "mondrian/solver.hpp"

namespace {

using namespace mondrian;

PieceSet Ps(std::int64_t w, std::int64_t h, std::int64_t r) {
  return std::get<PieceSet>(MakePieceSet(w, h, r));
}

void BM_PieceSet(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    for (const CaseSpec& c : EnumerateCases(n, n)) {
      benchmark::DoNotOptimize(MakePieceSet(c));
    }
  }
}
BENCHMARK(BM_PieceSet)->Arg(360)->Arg(720)->Arg(960);

void BM_SideSubsets(benchmark::State& state) {
  const PieceSet ps = Ps(420, 420, 14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SideSubsets(ps, Axis::kHorizontal, 1));
  }
}
BENCHMARK(BM_SideSubsets);

void BM_PerimeterCandidates(benchmark::State& state) {
  const PieceSet ps = Ps(360, 360, 12);
  for (auto _ : state) {
    std::int64_t count = 0;
    ForEachPerimeterCandidate(ps, {}, [&](const PerimeterCandidate&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PerimeterCandidates)->Unit(benchmark::kMillisecond);

void BM_GapAndHole(benchmark::State& state) {
  const PieceSet ps = Ps(360, 360, 12);
  const auto candidates = PerimeterCandidates(ps);
  for (auto _ : state) {
    int pass = 0;
    for (const PerimeterCandidate& c : candidates) {
      pass += GapCheck(c, ps).pass && HoleCheck(c, ps).pass;
    }
    benchmark::DoNotOptimize(pass);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(candidates.size()));
}
BENCHMARK(BM_GapAndHole)->Unit(benchmark::kMillisecond);

void BM_PipelineScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScanSquares(1, state.range(0), {}, 1));
  }
}
BENCHMARK(BM_PipelineScan)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SolveBoard84(benchmark::State& state) {
  SearchOptions o;
  o.symmetry = state.range(0) ? Symmetry::kAuto : Symmetry::kNone;
  const EngineProblem p = EngineProblem::Pmp(Ps(84, 84, 7), o);
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = Solve(p).stats.nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveBoard84)->Arg(0)->Arg(1);

void BM_SolveGuillotine(benchmark::State& state) {
  const auto inst = oracle::RandomGuillotine(60, 60, static_cast<int>(state.range(0)), 7);
  const EngineProblem p = EngineProblem::Generic(
      60, 60, oracle::EntriesWithRotations(inst.pieces, 60, 60));
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p));
}
BENCHMARK(BM_SolveGuillotine)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

// Complete search of the 84 case split across worker counts.
void BM_ParallelBoard84(benchmark::State& state) {
  const EngineProblem p = EngineProblem::Pmp(Ps(84, 84, 7));
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SolveParallel(p, workers));
}
BENCHMARK(BM_ParallelBoard84)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
