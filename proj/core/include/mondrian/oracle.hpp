#ifndef MONDRIAN_ORACLE_HPP_
#define MONDRIAN_ORACLE_HPP_

// Slow reference implementations used to cross-check the fast code paths.
// Keep them obvious: no pruning beyond what correctness needs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mondrian/tiling.hpp"

namespace mondrian::oracle {

struct SpanItem {
  int class_id = 0;
  std::int64_t span = 0;
};

// Every subset (as ascending positions into `items`) of pairwise distinct
// classes whose spans sum to `target` and that has at least `min_size`
// members. Enumerates the full power set, so items.size() must be <= 24.
std::vector<std::vector<int>> SubsetSumAll(const std::vector<SpanItem>& items,
                                           std::int64_t target, int min_size);

enum class NaiveStatus { kFound, kExhausted };

struct NaiveResult {
  NaiveStatus status = NaiveStatus::kExhausted;
  std::optional<Tiling> tiling;
};

// Exact cover on a cell grid: fill the first empty cell (row-major from the
// bottom-left) with each unused entry in list order. Entries sharing a class
// are mutually exclusive.
NaiveResult NaiveTile(std::int64_t width, std::int64_t height,
                      const std::vector<Entry>& entries);

// Both orientations of each (w, h), one class per input pair. Squares and
// rotations that do not fit the board contribute one entry or none.
std::vector<Entry> EntriesWithRotations(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pieces,
    std::int64_t board_width, std::int64_t board_height);

struct GuillotineInstance {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::uint64_t seed = 0;
  // Piece dimensions as generated (width, height), pairwise non-congruent.
  std::vector<std::pair<std::int64_t, std::int64_t>> pieces;
  Tiling witness;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Performs `cuts` random guillotine splits of a width x height board using
// std::mt19937_64 seeded with `seed`. Every draw is `engine() % n`. The first
// draw picks the axis of the first cut (0 vertical, 1 horizontal); each cut
// piece then alternates axis in its children. A cut picks a piece (draw %
// piece count) and an offset 1 + draw % (side - 1). A draw that hits a side of
// length 1 or creates a piece congruent to another is discarded; after
// `retry_budget` discarded draws GenerationFailed is thrown. The result has
// cuts + 1 pieces.
GuillotineInstance RandomGuillotine(std::int64_t width, std::int64_t height,
                                    int cuts, std::uint64_t seed,
                                    int retry_budget = 1000);

}  // namespace mondrian::oracle

#endif  // MONDRIAN_ORACLE_HPP_
