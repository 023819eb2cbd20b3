#include "mondrian/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>

namespace mondrian {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kNoPieceSet:
      return "NO_PIECE_SET";
    case Stage::kSide:
      return "SIDE";
    case Stage::kPerimeter:
      return "PERIMETER";
    case Stage::kGap:
      return "GAP";
    case Stage::kHole:
      return "HOLE";
    case Stage::kRefuted:
      return "REFUTED";
    case Stage::kSurvivor:
      return "SURVIVOR";
    case Stage::kTimeout:
      return "TIMEOUT";
  }
  return "UNKNOWN";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : {Stage::kNoPieceSet, Stage::kSide, Stage::kPerimeter,
                  Stage::kGap, Stage::kHole, Stage::kRefuted,
                  Stage::kSurvivor,
                  Stage::kTimeout}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

StageSet StageSet::Through(Stage last) {
  StageSet s;
  s.perimeter = last >= Stage::kPerimeter;
  s.gap = last >= Stage::kGap;
  s.hole = last >= Stage::kHole;
  return s;
}

StageSet StageSet::Parse(std::string_view list) {
  StageSet s{false, false, false, false};
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view token = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{}
                                           : list.substr(comma + 1);
    if (token == "side") {
      s.side = true;
    } else if (token == "perimeter") {
      s.perimeter = true;
    } else if (token == "gap") {
      s.gap = true;
    } else if (token == "hole") {
      s.hole = true;
    } else if (!token.empty()) {
      throw std::invalid_argument("unknown filter stage '" +
                                  std::string(token) + "'");
    }
  }
  return s;
}

std::string StageSet::ToString() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(side, "side");
  add(perimeter, "perimeter");
  add(gap, "gap");
  add(hole, "hole");
  return out;
}

namespace {

// A PMP tiles some horizontal line with at least two pieces, and likewise
// some vertical line; on squares the rotation-closed piece set makes the two
// checks identical.
bool PassesSideFilter(const PieceSet& ps) {
  if (!HasSideSubset(ps, Axis::kHorizontal, 2)) return false;
  if (ps.spec().width == ps.spec().height) return true;
  return HasSideSubset(ps, Axis::kVertical, 2);
}

}  // namespace

PipelineVerdict RunCase(const CaseSpec& spec, const PipelineOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  PipelineVerdict verdict;
  verdict.spec = spec;
  auto finish = [&](Stage stage) {
    verdict.stage = stage;
    verdict.elapsed = Clock::now() - start;
    return verdict;
  };

  const PieceSetResult made = MakePieceSet(spec);
  if (std::holds_alternative<InfeasibleCase>(made)) {
    return finish(Stage::kNoPieceSet);
  }
  const PieceSet& ps = std::get<PieceSet>(made);

  if (options.stages.side && !PassesSideFilter(ps)) return finish(Stage::kSide);
  if (!options.stages.perimeter) return finish(Stage::kSurvivor);

  const auto deadline =
      options.case_timeout
          ? std::optional<Clock::time_point>(start + *options.case_timeout)
          : std::nullopt;
  bool timed_out = false;
  PerimeterOptions perimeter;
  perimeter.include_singletons = options.include_singletons;
  if (deadline) {
    perimeter.should_stop = [&] {
      timed_out = timed_out || Clock::now() > *deadline;
      return timed_out;
    };
  }

  // Furthest stage reached by any candidate.
  Stage best = Stage::kPerimeter;
  std::int64_t survivors = 0;
  ForEachPerimeterCandidate(ps, perimeter, [&](const PerimeterCandidate& c) {
    best = std::max(best, Stage::kGap);
    if (options.stages.gap && !GapCheck(c, ps, options.gap_mode).pass) {
      return true;
    }
    best = std::max(best, Stage::kHole);
    if (options.stages.hole && !HoleCheck(c, ps).pass) return true;
    if (options.refine) {
      best = std::max(best, Stage::kRefuted);
      SearchOptions search;
      search.limits = *options.refine;
      SolveResult r = RefuteCandidate(ps, c, search);
      if (r.status == SolveStatus::kExhausted) {
        ++verdict.refuted_candidates;
        return true;
      }
      if (r.status == SolveStatus::kFound) {
        verdict.witness = std::move(r.tiling);
        best = Stage::kSurvivor;
        ++survivors;
        return false;
      }
    }
    best = Stage::kSurvivor;
    ++survivors;
    return !options.first_survivor_only;
  });
  verdict.surviving_candidates = survivors;
  if (timed_out && survivors == 0) return finish(Stage::kTimeout);
  return finish(best);
}

std::vector<PipelineVerdict> RunPipeline(std::int64_t width,
                                         std::int64_t height,
                                         const PipelineOptions& options) {
  std::vector<PipelineVerdict> out;
  for (const CaseSpec& spec : EnumerateCases(width, height)) {
    out.push_back(RunCase(spec, options));
  }
  return out;
}

bool BoardSummary::survives() const {
  if (error) return true;
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const PipelineVerdict& v) { return !v.eliminated(); });
}

std::vector<BoardSummary> ScanBoards(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& boards,
    const PipelineOptions& options, int workers,
    const ScanProgress& progress) {
  std::vector<BoardSummary> out(boards.size());
  std::vector<bool> done(boards.size(), false);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < boards.size(); i = next++) {
      BoardSummary summary{boards[i].first, boards[i].second, {}, {}};
      try {
        summary.verdicts =
            RunPipeline(boards[i].first, boards[i].second, options);
      } catch (const std::exception& e) {
        summary.error = e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      out[i] = std::move(summary);
      done[i] = true;
      cv.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 0; w < std::max(1, workers); ++w) pool.emplace_back(work);

  // Report in board order from this thread.
  for (std::size_t i = 0; i < boards.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[i]; });
    if (progress) {
      const BoardSummary snapshot = out[i];
      lock.unlock();
      progress(snapshot);
    }
  }
  return out;
}

std::vector<BoardSummary> ScanSquares(std::int64_t first, std::int64_t last,
                                      const PipelineOptions& options,
                                      int workers,
                                      const ScanProgress& progress) {
  std::vector<std::pair<std::int64_t, std::int64_t>> boards;
  for (std::int64_t n = std::max<std::int64_t>(first, 1); n <= last; ++n) {
    boards.emplace_back(n, n);
  }
  return ScanBoards(boards, options, workers, progress);
}

}  // namespace mondrian
