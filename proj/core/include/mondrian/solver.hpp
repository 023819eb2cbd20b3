#ifndef MONDRIAN_SOLVER_HPP_
#define MONDRIAN_SOLVER_HPP_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mondrian/filters.hpp"
#include "mondrian/pieces.hpp"
#include "mondrian/tiling.hpp"

namespace mondrian {

enum class EngineMode {
  kPmp,      // equal-area pieces from a PieceSet; at most one per class
  kGeneric,  // arbitrary entries; at most one per class
};

enum class Symmetry {
  kAuto,    // square rules for square PMP boards, none otherwise
  kNone,
  kSquare,  // first piece w <= h; bottom-right piece strictly between
  kMirror,  // bottom-right piece wider than bottom-left
};

struct SearchLimits {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

struct SearchOptions {
  Symmetry symmetry = Symmetry::kAuto;
  // Admit PMP problems with fewer than seven pieces.
  bool lemma_audit = false;
  int workers = 1;
  // With several workers, return the witness sequential search would find.
  bool canonical_witness = false;
  SearchLimits limits;
};

// Bit flags for the board sides a piece touches.
enum SideBit : unsigned {
  kTouchBottom = 1,
  kTouchRight = 2,
  kTouchTop = 4,
  kTouchLeft = 8,
};

class EngineProblem {
 public:
  // Throws std::invalid_argument for unusable option combinations (square
  // symmetry on a rectangle, symmetry in generic mode, r < 7 outside a lemma
  // audit).
  static EngineProblem Pmp(const PieceSet& ps, SearchOptions options = {});
  static EngineProblem Generic(std::int64_t width, std::int64_t height,
                               std::vector<Entry> entries,
                               SearchOptions options = {});

  // Restrict the search to tilings whose boundary is exactly `cand`: every
  // perimeter entry touches precisely its sides, other entries of unused
  // classes touch none, and nothing else may be placed.
  static EngineProblem WithBoundary(const PieceSet& ps,
                                    const PerimeterCandidate& cand,
                                    SearchOptions options = {});

  std::int64_t width() const { return width_; }
  std::int64_t height() const { return height_; }
  EngineMode mode() const { return mode_; }
  // Ascending width, then height.
  const std::vector<Entry>& entries() const { return entries_; }
  int class_count() const { return class_count_; }
  const SearchOptions& options() const { return options_; }
  Symmetry symmetry() const { return symmetry_; }
  std::optional<std::int64_t> piece_area() const { return piece_area_; }
  // Required side flags per entry, when boundary constrained.
  const std::optional<std::vector<unsigned>>& touch() const { return touch_; }

  void set_options(const SearchOptions& options);

 private:
  EngineProblem() = default;
  void Finish();

  std::int64_t width_ = 0;
  std::int64_t height_ = 0;
  EngineMode mode_ = EngineMode::kGeneric;
  std::vector<Entry> entries_;
  int class_count_ = 0;
  SearchOptions options_;
  Symmetry symmetry_ = Symmetry::kNone;
  std::optional<std::int64_t> piece_area_;
  std::optional<std::vector<unsigned>> touch_;
};

enum class SolveStatus { kFound, kExhausted, kLimit };

std::string_view StatusName(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
  int tasks = 0;           // parallel prefixes
  int tasks_finished = 0;
  int max_depth = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kExhausted;
  std::optional<Tiling> tiling;
  SolveStats stats;
};

// Complete skyline backtracking: repeatedly fills the leftmost lowest column
// with every unused entry that fits, in ascending width order.
SolveResult Solve(const EngineProblem& problem);

// Splits the search into (first, second) placement prefixes and runs them on
// `workers` threads. Same verdict as Solve.
SolveResult SolveParallel(const EngineProblem& problem, int workers);

// Solve or SolveParallel depending on options().workers.
SolveResult Run(const EngineProblem& problem);

// Exhausting the boundary-constrained search proves no PMP has this
// perimeter.
SolveResult RefuteCandidate(const PieceSet& ps, const PerimeterCandidate& cand,
                            const SearchOptions& options = {});

}  // namespace mondrian

#endif  // MONDRIAN_SOLVER_HPP_
