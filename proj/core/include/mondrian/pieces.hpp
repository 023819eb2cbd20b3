#ifndef MONDRIAN_PIECES_HPP_
#define MONDRIAN_PIECES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mondrian {

// Board sides are capped so that every product of two sides fits easily in
// 64-bit signed arithmetic.
inline constexpr std::int64_t kMaxBoardSide = 100000;

// One problem instance: tile a width x height board with piece_count
// rectangles of area piece_area.
struct CaseSpec {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t piece_count = 0;
  std::int64_t piece_area = 0;

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

// Builds a CaseSpec, throwing std::invalid_argument when a side is out of
// range or piece_count does not divide the board area.
CaseSpec MakeCase(std::int64_t width, std::int64_t height,
                  std::int64_t piece_count);

// An oriented piece. The first coordinate is always the horizontal extent.
struct Piece {
  std::int64_t width = 0;
  std::int64_t height = 0;
  int index = 0;     // 1-based position in the width-sorted list
  int class_id = 0;  // congruence class, 0-based

  friend bool operator==(const Piece&, const Piece&) = default;
};

// The candidate pieces for one case: every divisor pair (d, area/d) that fits
// the board, ascending by width. Both orientations of a class appear when
// both fit, so on square boards the list is closed under rotation.
class PieceSet {
 public:
  PieceSet(CaseSpec spec, std::vector<Piece> pieces, int class_count);

  const CaseSpec& spec() const { return spec_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  int size() const { return static_cast<int>(pieces_.size()); }
  int class_count() const { return class_count_; }

  // 0-based access.
  const Piece& operator[](int i) const { return pieces_[i]; }

  // 0-based position of the 90 degree rotation of entry i, if it fits the
  // board.
  std::optional<int> RotationOf(int i) const;

  // Entries of class c (one or two, ascending width).
  const std::vector<int>& EntriesOfClass(int c) const {
    return class_entries_[c];
  }

 private:
  CaseSpec spec_;
  std::vector<Piece> pieces_;
  int class_count_ = 0;
  std::vector<std::vector<int>> class_entries_;
};

enum class Infeasibility {
  kNotDivisor,      // r does not divide W*H
  kTooFewClasses,   // fewer congruence classes than pieces required
};

struct InfeasibleCase {
  Infeasibility reason;
  int class_count = 0;
  std::string Describe() const;
};

using PieceSetResult = std::variant<PieceSet, InfeasibleCase>;

// Ascending divisors of x by trial division. x must be >= 1.
std::vector<std::int64_t> Divisors(std::int64_t x);

// Piece set for a case, or why the case cannot hold r pairwise non-congruent
// pieces.
PieceSetResult MakePieceSet(const CaseSpec& spec);
PieceSetResult MakePieceSet(std::int64_t width, std::int64_t height,
                            std::int64_t piece_count);

// Number of congruence classes of area-`area` rectangles that fit the board,
// without building the piece list.
int CountClasses(std::int64_t width, std::int64_t height, std::int64_t area);

// Smallest piece count a perfect partition can have.
inline constexpr std::int64_t kMinPerfectPieces = 7;

struct EnumerateOptions {
  // Lower bound on r. The default applies the seven-piece lower bound;
  // lemma audits lower it to 2.
  std::int64_t min_pieces = kMinPerfectPieces;
  std::int64_t max_pieces = 0;  // 0 = no upper bound
};

// All feasible cases for a board, ascending by piece count.
std::vector<CaseSpec> EnumerateCases(std::int64_t width, std::int64_t height,
                                     const EnumerateOptions& options = {});

}  // namespace mondrian

#endif  // MONDRIAN_PIECES_HPP_
