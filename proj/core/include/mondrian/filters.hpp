#ifndef MONDRIAN_FILTERS_HPP_
#define MONDRIAN_FILTERS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mondrian/pieces.hpp"

namespace mondrian {

// HORIZONTAL subsets tile a horizontal board edge (widths sum to W);
// VERTICAL subsets tile a vertical edge (heights sum to H).
enum class Axis { kHorizontal, kVertical };

struct SideSubset {
  Axis axis = Axis::kHorizontal;
  std::vector<int> members;  // 0-based PieceSet entries, ascending
  std::int64_t span_sum = 0;

  friend bool operator==(const SideSubset&, const SideSubset&) = default;
};

// Every class-distinct subset of entries with at least `min_size` members
// whose spans along `axis` sum to the board side. Lexicographic order by
// member list.
std::vector<SideSubset> SideSubsets(const PieceSet& ps, Axis axis,
                                    int min_size);

// Existence-only variant of SideSubsets; stops at the first hit.
bool HasSideSubset(const PieceSet& ps, Axis axis, int min_size);

struct Neighbor {
  int subset = 0;        // index into the other axis' subset list
  int shared_entry = 0;  // the single entry both subsets contain
};

// Vertical/horizontal subsets that share exactly one entry.
class NeighborTable {
 public:
  NeighborTable(const std::vector<SideSubset>& vertical,
                const std::vector<SideSubset>& horizontal);

  // Horizontal neighbours of vertical subset v, ascending by subset index.
  const std::vector<Neighbor>& OfVertical(int v) const {
    return of_vertical_[v];
  }
  // Vertical neighbours of horizontal subset h, ascending by subset index.
  const std::vector<Neighbor>& OfHorizontal(int h) const {
    return of_horizontal_[h];
  }
  std::optional<int> Shared(int v, int h) const;

 private:
  std::vector<std::vector<Neighbor>> of_vertical_;
  std::vector<std::vector<Neighbor>> of_horizontal_;
};

struct Corners {
  int bottom_left = 0;
  int bottom_right = 0;
  int top_left = 0;
  int top_right = 0;

  friend bool operator==(const Corners&, const Corners&) = default;
};

// Four side subsets closing a vertical/horizontal adjacency 4-cycle.
struct PerimeterCandidate {
  SideSubset bottom;
  SideSubset top;
  SideSubset left;
  SideSubset right;
  Corners corners;

  // Distinct entries across the four sides, ascending.
  std::vector<int> Entries() const;
  friend bool operator==(const PerimeterCandidate&,
                         const PerimeterCandidate&) = default;
};

struct PerimeterOptions {
  // Admit single-piece sides (a full-span piece covering both corners).
  bool include_singletons = true;
  // Polled between candidates; returning true aborts the enumeration.
  std::function<bool()> should_stop;
};

// Visits every class-valid candidate in deterministic order. The visitor
// returns false to stop early. Returns false if enumeration was cut short by
// the visitor or by should_stop.
bool ForEachPerimeterCandidate(
    const PieceSet& ps, const PerimeterOptions& options,
    const std::function<bool(const PerimeterCandidate&)>& visit);

std::vector<PerimeterCandidate> PerimeterCandidates(
    const PieceSet& ps, const PerimeterOptions& options = {});

// Checks the structural invariants of a candidate against its piece set.
// Returns a diagnostic, or nullopt when the candidate is valid.
std::optional<std::string> ValidateCandidate(const PerimeterCandidate& cand,
                                             const PieceSet& ps);

// MIXED lets every unused class fill a gap with either side; STRICT only
// allows one uniform choice (all short sides, or all long sides).
enum class GapMode { kMixed, kStrict };

enum class BoardSide { kBottom, kRight, kTop, kLeft };

struct SideGap {
  BoardSide side = BoardSide::kBottom;
  int min_piece = 0;                  // entry with the smallest inward extent
  std::vector<int> resting;           // perimeter entries resting on it
  std::int64_t extent = 0;            // gap length for the chosen ordering
  bool fillable = false;
  std::vector<std::int64_t> witness;  // filler lengths summing to extent
  std::vector<int> witness_classes;   // class of each filler length
};

struct GapResult {
  bool pass = false;
  // Non-perimeter pieces available as fillers: r minus classes used.
  int filler_budget = 0;
  // All four gaps fit together within filler_budget classes.
  bool jointly_fillable = false;
  std::array<SideGap, 4> sides;  // bottom, right, top, left
};

GapResult GapCheck(const PerimeterCandidate& cand, const PieceSet& ps,
                   GapMode mode = GapMode::kMixed);

struct HoleResult {
  bool pass = false;
  std::int64_t max_hole_width = 0;   // mwh
  std::int64_t max_hole_height = 0;  // mhh
  int used_classes = 0;              // p
  int fitting_classes = 0;           // f, unused classes that fit
  std::vector<int> non_fitting_classes;
};

HoleResult HoleCheck(const PerimeterCandidate& cand, const PieceSet& ps);

// Exact subset sum over lengths where each group contributes at most one of
// its options. Returns the chosen (group, length) pairs, or nullopt.
std::optional<std::vector<std::pair<int, std::int64_t>>> GroupedSubsetSum(
    const std::vector<std::vector<std::int64_t>>& options_per_group,
    std::int64_t target);

}  // namespace mondrian

#endif  // MONDRIAN_FILTERS_HPP_
