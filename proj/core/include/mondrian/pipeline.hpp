#ifndef MONDRIAN_PIPELINE_HPP_
#define MONDRIAN_PIPELINE_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mondrian/filters.hpp"
#include "mondrian/pieces.hpp"
#include "mondrian/solver.hpp"

namespace mondrian {

// Where a case left the cascade. kRefuted means every candidate that passed
// the filters was exhausted by the boundary-constrained solver. kTimeout
// cases were not decided and are reported as not eliminated.
enum class Stage {
  kNoPieceSet,
  kSide,
  kPerimeter,
  kGap,
  kHole,
  kRefuted,
  kSurvivor,
  kTimeout,
};

std::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

// The filters to run, always applied in cascade order.
struct StageSet {
  bool side = true;
  bool perimeter = true;
  bool gap = true;
  bool hole = true;

  static StageSet Through(Stage last);
  // Comma separated list such as "side,perimeter". Throws
  // std::invalid_argument on unknown names.
  static StageSet Parse(std::string_view list);
  std::string ToString() const;
};

struct PipelineOptions {
  StageSet stages;
  GapMode gap_mode = GapMode::kMixed;
  bool include_singletons = true;
  // Stop after the first surviving candidate instead of counting them all.
  bool first_survivor_only = false;
  std::optional<std::chrono::milliseconds> case_timeout;
  // When set, candidates passing every filter are handed to RefuteCandidate
  // with these per-candidate limits.
  std::optional<SearchLimits> refine;
};

struct PipelineVerdict {
  CaseSpec spec;
  Stage stage = Stage::kSurvivor;
  // Candidates that passed every enabled stage (and, with refinement, were
  // not exhausted by the solver).
  std::int64_t surviving_candidates = 0;
  std::chrono::nanoseconds elapsed{0};
  // Refinement bookkeeping.
  std::int64_t refuted_candidates = 0;
  std::optional<Tiling> witness;  // a perfect partition, should one turn up

  bool eliminated() const {
    return stage != Stage::kSurvivor && stage != Stage::kTimeout;
  }
};

PipelineVerdict RunCase(const CaseSpec& spec, const PipelineOptions& options);

// One verdict per feasible piece count of the board, ascending by r.
std::vector<PipelineVerdict> RunPipeline(std::int64_t width,
                                         std::int64_t height,
                                         const PipelineOptions& options);

struct BoardSummary {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<PipelineVerdict> verdicts;
  // Set when evaluating the board threw; verdicts are then incomplete.
  std::optional<std::string> error;

  // A board survives if any of its cases does.
  bool survives() const;
};

using ScanProgress = std::function<void(const BoardSummary&)>;

// Runs the pipeline over n x n squares for n in [first, last], spread over
// `workers` threads. Results come back ordered by n regardless of worker
// interleaving; `progress` is called from a single thread in that order.
std::vector<BoardSummary> ScanSquares(std::int64_t first, std::int64_t last,
                                      const PipelineOptions& options,
                                      int workers,
                                      const ScanProgress& progress = {});

// Same for every board listed.
std::vector<BoardSummary> ScanBoards(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& boards,
    const PipelineOptions& options, int workers,
    const ScanProgress& progress = {});

}  // namespace mondrian

#endif  // MONDRIAN_PIPELINE_HPP_
