#ifndef MONDRIAN_TESTS_SUPPORT_HPP_
#define MONDRIAN_TESTS_SUPPORT_HPP_

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mondrian/filters.hpp"
#include "mondrian/pieces.hpp"

namespace mondrian::testing {

using Dims = std::pair<std::int64_t, std::int64_t>;

// Divisors by testing every candidate; independent of Divisors().
inline std::vector<std::int64_t> NaiveDivisors(std::int64_t x) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= x; ++d) {
    if (x % d == 0) out.push_back(d);
  }
  return out;
}

// Widths d with d | area, d <= W and area / d <= H.
inline std::vector<std::int64_t> NaiveWidths(std::int64_t w, std::int64_t h,
                                             std::int64_t area) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : NaiveDivisors(area)) {
    if (d <= w && area / d <= h) out.push_back(d);
  }
  return out;
}

inline PieceSet Ps(std::int64_t w, std::int64_t h, std::int64_t r) {
  PieceSetResult made = MakePieceSet(w, h, r);
  if (!std::holds_alternative<PieceSet>(made)) {
    ADD_FAILURE() << w << "x" << h << " r=" << r << " is infeasible";
    throw std::runtime_error("infeasible fixture");
  }
  return std::get<PieceSet>(std::move(made));
}

inline int EntryOf(const PieceSet& ps, Dims d) {
  for (int i = 0; i < ps.size(); ++i) {
    if (ps[i].width == d.first && ps[i].height == d.second) return i;
  }
  return -1;
}

inline std::set<Dims> DimsOf(const PieceSet& ps, const SideSubset& s) {
  std::set<Dims> out;
  for (int m : s.members) out.insert({ps[m].width, ps[m].height});
  return out;
}

struct SideDims {
  std::set<Dims> bottom, top, left, right;
};

inline bool Matches(const PieceSet& ps, const PerimeterCandidate& c,
                    const SideDims& want) {
  return DimsOf(ps, c.bottom) == want.bottom && DimsOf(ps, c.top) == want.top &&
         DimsOf(ps, c.left) == want.left && DimsOf(ps, c.right) == want.right;
}

inline std::optional<PerimeterCandidate> FindCandidate(const PieceSet& ps,
                                                       const SideDims& want) {
  std::optional<PerimeterCandidate> hit;
  ForEachPerimeterCandidate(ps, {}, [&](const PerimeterCandidate& c) {
    if (!Matches(ps, c, want)) return true;
    hit = c;
    return false;
  });
  return hit;
}

// The 360 x 360, r = 12 boundary drawn in the published example: seven
// pieces, bottom-left corner 240x45.
inline SideDims Example360() {
  return {{{240, 45}, {120, 90}},
          {{60, 180}, {100, 108}, {200, 54}},
          {{240, 45}, {80, 135}, {60, 180}},
          {{120, 90}, {50, 216}, {200, 54}}};
}

}  // namespace mondrian::testing

#endif  // MONDRIAN_TESTS_SUPPORT_HPP_
