#include "mondrian/tiling.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace mondrian {

std::optional<std::string> ValidateTiling(const Tiling& t,
                                          const TilingCheck& check) {
  if (t.width < 1 || t.height < 1) return "board has a non-positive side";
  std::set<std::pair<std::int64_t, std::int64_t>> shapes;
  std::set<int> classes;
  std::int64_t area = 0;
  for (const PlacedPiece& p : t.pieces) {
    if (p.width < 1 || p.height < 1) return "piece with non-positive side";
    if (p.x < 0 || p.y < 0 || p.x + p.width > t.width ||
        p.y + p.height > t.height) {
      return "piece outside the board";
    }
    if (check.equal_area && p.width * p.height != *check.equal_area) {
      return "piece area differs from the common area";
    }
    if (!classes.insert(p.class_id).second) return "class used twice";
    const auto shape = std::minmax(p.width, p.height);
    if (!shapes.insert(shape).second && check.require_noncongruent) {
      return "two congruent pieces";
    }
    area += p.width * p.height;
  }
  if (check.piece_count &&
      static_cast<std::int64_t>(t.pieces.size()) != *check.piece_count) {
    return "wrong number of pieces";
  }
  if (check.require_cover && area != t.width * t.height) {
    return "piece areas do not sum to the board";
  }

  // Sweep in x: pieces whose x-ranges overlap must have disjoint y-ranges.
  std::vector<PlacedPiece> by_x = t.pieces;
  std::sort(by_x.begin(), by_x.end(),
            [](const PlacedPiece& a, const PlacedPiece& b) { return a.x < b.x; });
  for (std::size_t i = 0; i < by_x.size(); ++i) {
    for (std::size_t j = i + 1; j < by_x.size(); ++j) {
      if (by_x[j].x >= by_x[i].x + by_x[i].width) break;
      const bool y_overlap = by_x[i].y < by_x[j].y + by_x[j].height &&
                             by_x[j].y < by_x[i].y + by_x[i].height;
      if (y_overlap) return "pieces overlap";
    }
  }

  if (t.width * t.height <= check.cell_audit_limit) {
    std::vector<unsigned char> cells(t.width * t.height, 0);
    for (const PlacedPiece& p : t.pieces) {
      for (std::int64_t y = p.y; y < p.y + p.height; ++y) {
        for (std::int64_t x = p.x; x < p.x + p.width; ++x) {
          if (cells[y * t.width + x]++ != 0) return "cell covered twice";
        }
      }
    }
    if (check.require_cover &&
        std::find(cells.begin(), cells.end(), 0) != cells.end()) {
      return "cell left uncovered";
    }
  }
  return std::nullopt;
}

}  // namespace mondrian
