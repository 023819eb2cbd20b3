#ifndef MONDRIAN_TILING_HPP_
#define MONDRIAN_TILING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mondrian {

// A piece the search may place, in a fixed orientation. Entries sharing a
// class_id are mutually exclusive (congruent pieces).
struct Entry {
  std::int64_t width = 0;
  std::int64_t height = 0;
  int class_id = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// A placed rectangle; (x, y) is its bottom-left cell.
struct PlacedPiece {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t width = 0;
  std::int64_t height = 0;
  int class_id = 0;

  friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

struct Tiling {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<PlacedPiece> pieces;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

struct TilingCheck {
  // Require every piece to have this area (perfect partitions).
  std::optional<std::int64_t> equal_area;
  // Reject two pieces with the same dimensions even across classes.
  bool require_noncongruent = true;
  // Require exactly this many pieces.
  std::optional<std::int64_t> piece_count;
  // When false, a partial packing is accepted: pieces must still be inside
  // the board and pairwise disjoint, but may leave cells uncovered.
  bool require_cover = true;
  // Boards up to this many cells also get a per-cell coverage audit.
  std::int64_t cell_audit_limit = std::int64_t{1} << 22;
};

// Independent check that `t` is an exact dissection of its board by pieces of
// pairwise distinct classes. Returns a diagnostic or nullopt.
std::optional<std::string> ValidateTiling(const Tiling& t,
                                          const TilingCheck& check = {});

}  // namespace mondrian

#endif  // MONDRIAN_TILING_HPP_
