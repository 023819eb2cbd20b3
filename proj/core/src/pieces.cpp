#include "mondrian/pieces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace mondrian {

CaseSpec MakeCase(std::int64_t width, std::int64_t height,
                  std::int64_t piece_count) {
  if (width < 1 || height < 1 || width > kMaxBoardSide ||
      height > kMaxBoardSide) {
    throw std::invalid_argument("board sides must lie in [1, " +
                                std::to_string(kMaxBoardSide) + "]");
  }
  if (piece_count < 1) {
    throw std::invalid_argument("piece count must be positive");
  }
  const std::int64_t area = width * height;
  if (area % piece_count != 0) {
    throw std::invalid_argument("piece count " + std::to_string(piece_count) +
                                " does not divide board area " +
                                std::to_string(area));
  }
  return CaseSpec{width, height, piece_count, area / piece_count};
}

PieceSet::PieceSet(CaseSpec spec, std::vector<Piece> pieces, int class_count)
    : spec_(spec), pieces_(std::move(pieces)), class_count_(class_count) {
  class_entries_.resize(class_count_);
  for (int i = 0; i < size(); ++i) {
    class_entries_[pieces_[i].class_id].push_back(i);
  }
}

std::optional<int> PieceSet::RotationOf(int i) const {
  const Piece& p = pieces_[i];
  for (int j : class_entries_[p.class_id]) {
    if (pieces_[j].width == p.height && pieces_[j].height == p.width) return j;
  }
  return std::nullopt;
}

std::string InfeasibleCase::Describe() const {
  switch (reason) {
    case Infeasibility::kNotDivisor:
      return "piece count does not divide the board area";
    case Infeasibility::kTooFewClasses:
      return "only " + std::to_string(class_count) +
             " congruence classes fit the board, fewer than the piece count";
  }
  return "infeasible";
}

std::vector<std::int64_t> Divisors(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("Divisors requires x >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    low.push_back(d);
    if (d != x / d) high.push_back(x / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

namespace {

// Oriented divisor pairs (d, area/d) with d <= width and area/d <= height.
std::vector<std::pair<std::int64_t, std::int64_t>> FittingPairs(
    std::int64_t width, std::int64_t height, std::int64_t area) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d : Divisors(area)) {
    if (d <= width && area / d <= height) out.emplace_back(d, area / d);
  }
  return out;
}

}  // namespace

int CountClasses(std::int64_t width, std::int64_t height, std::int64_t area) {
  int count = 0;
  for (auto [w, h] : FittingPairs(width, height, area)) {
    // Count each unordered pair once: keep the orientation with w <= h, or the
    // only orientation that fits.
    const bool rotated_fits = h <= width && w <= height;
    if (w <= h || !rotated_fits) ++count;
  }
  return count;
}

PieceSetResult MakePieceSet(const CaseSpec& spec) {
  const auto pairs =
      FittingPairs(spec.width, spec.height, spec.piece_area);

  // Class ids follow the shorter side ascending.
  std::map<std::int64_t, int> class_of_short_side;
  for (auto [w, h] : pairs) class_of_short_side.emplace(std::min(w, h), 0);
  int next = 0;
  for (auto& [side, id] : class_of_short_side) id = next++;
  const int class_count = next;

  if (class_count < spec.piece_count) {
    return InfeasibleCase{Infeasibility::kTooFewClasses, class_count};
  }
  std::vector<Piece> pieces;
  pieces.reserve(pairs.size());
  for (auto [w, h] : pairs) {
    pieces.push_back(Piece{w, h, static_cast<int>(pieces.size()) + 1,
                           class_of_short_side.at(std::min(w, h))});
  }
  return PieceSet(spec, std::move(pieces), class_count);
}

PieceSetResult MakePieceSet(std::int64_t width, std::int64_t height,
                            std::int64_t piece_count) {
  if (width >= 1 && height >= 1 && piece_count >= 1 &&
      (width * height) % piece_count != 0) {
    return InfeasibleCase{Infeasibility::kNotDivisor, 0};
  }
  return MakePieceSet(MakeCase(width, height, piece_count));
}

std::vector<CaseSpec> EnumerateCases(std::int64_t width, std::int64_t height,
                                     const EnumerateOptions& options) {
  if (width < 1 || height < 1 || width > kMaxBoardSide ||
      height > kMaxBoardSide) {
    throw std::invalid_argument("board sides out of range");
  }
  std::vector<CaseSpec> out;
  const std::int64_t area = width * height;
  for (std::int64_t r : Divisors(area)) {
    if (r < options.min_pieces) continue;
    if (options.max_pieces > 0 && r > options.max_pieces) break;
    // Fewer classes than pieces is the common rejection; count cheaply before
    // building the full set.
    if (CountClasses(width, height, area / r) < r) continue;
    out.push_back(CaseSpec{width, height, r, area / r});
  }
  return out;
}

}  // namespace mondrian
