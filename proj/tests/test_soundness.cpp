// Filters must never eliminate a boundary that a real tiling realizes. Perfect
// partitions are not available as fixtures, so these tests use random
// guillotine tilings by pairwise non-congruent pieces and build a piece set
// from their pieces (both orientations, one class per piece).
#include <gtest/gtest.h>

#include "mondrian/filters.hpp"
#include "mondrian/oracle.hpp"
#include "support.hpp"

namespace mondrian {
namespace {

PieceSet PieceSetFor(const oracle::GuillotineInstance& inst) {
  std::vector<Piece> pieces;
  const auto entries =
      oracle::EntriesWithRotations(inst.pieces, inst.width, inst.height);
  for (const Entry& e : entries) pieces.push_back({e.width, e.height, 0, e.class_id});
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return std::tie(a.width, a.height) < std::tie(b.width, b.height);
  });
  for (std::size_t i = 0; i < pieces.size(); ++i) pieces[i].index = static_cast<int>(i) + 1;
  const auto r = static_cast<std::int64_t>(inst.pieces.size());
  return PieceSet(CaseSpec{inst.width, inst.height, r, 0}, std::move(pieces),
                  static_cast<int>(r));
}

int EntryFor(const PieceSet& ps, const PlacedPiece& p) {
  for (int i = 0; i < ps.size(); ++i) {
    if (ps[i].width == p.width && ps[i].height == p.height &&
        ps[i].class_id == p.class_id) {
      return i;
    }
  }
  return -1;
}

PerimeterCandidate Realized(const PieceSet& ps, const Tiling& t) {
  PerimeterCandidate c;
  c.bottom = {Axis::kHorizontal, {}, t.width};
  c.top = {Axis::kHorizontal, {}, t.width};
  c.left = {Axis::kVertical, {}, t.height};
  c.right = {Axis::kVertical, {}, t.height};
  for (const PlacedPiece& p : t.pieces) {
    const int e = EntryFor(ps, p);
    const bool b = p.y == 0, l = p.x == 0;
    const bool r = p.x + p.width == t.width, tp = p.y + p.height == t.height;
    if (b) c.bottom.members.push_back(e);
    if (tp) c.top.members.push_back(e);
    if (l) c.left.members.push_back(e);
    if (r) c.right.members.push_back(e);
    if (b && l) c.corners.bottom_left = e;
    if (b && r) c.corners.bottom_right = e;
    if (tp && l) c.corners.top_left = e;
    if (tp && r) c.corners.top_right = e;
  }
  for (auto* s : {&c.bottom, &c.top, &c.left, &c.right}) {
    std::sort(s->members.begin(), s->members.end());
  }
  return c;
}

// The shortest piece on every side is unique. Equal-area tilings always
// satisfy this; the gap argument relies on it.
bool GapPreconditions(const Tiling& t) {
  struct Side {
    bool horizontal;
    bool far;  // top or right
  };
  for (Side s : {Side{true, false}, Side{true, true}, Side{false, false},
                 Side{false, true}}) {
    std::vector<const PlacedPiece*> on;
    for (const PlacedPiece& p : t.pieces) {
      const bool touches =
          s.horizontal ? (s.far ? p.y + p.height == t.height : p.y == 0)
                       : (s.far ? p.x + p.width == t.width : p.x == 0);
      if (touches) on.push_back(&p);
    }
    auto extent = [&](const PlacedPiece* p) {
      return s.horizontal ? p->height : p->width;
    };
    std::int64_t best = INT64_MAX;
    int ties = 0;
    for (const PlacedPiece* p : on) {
      if (extent(p) < best) {
        best = extent(p);
        ties = 1;
      } else if (extent(p) == best) {
        ++ties;
      }
    }
    if (ties != 1) return false;
  }
  return true;
}

TEST(FilterSoundness, GuillotineBoundariesSurvive) {
  int instances = 0, gap_checked = 0;
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    const int cuts = 4 + static_cast<int>(seed % 5);
    const std::int64_t w = 24 + static_cast<std::int64_t>(seed % 17);
    const std::int64_t h = 20 + static_cast<std::int64_t>(seed % 23);
    oracle::GuillotineInstance inst;
    try {
      inst = oracle::RandomGuillotine(w, h, cuts, seed);
    } catch (const oracle::GenerationFailed&) {
      continue;
    }
    ++instances;
    const PieceSet ps = PieceSetFor(inst);
    const PerimeterCandidate real = Realized(ps, inst.witness);
    ASSERT_EQ(ValidateCandidate(real, ps), std::nullopt) << "seed " << seed;

    // Every realized side is one of the enumerated side subsets.
    const auto horizontal = SideSubsets(ps, Axis::kHorizontal, 1);
    const auto vertical = SideSubsets(ps, Axis::kVertical, 1);
    auto listed = [](const std::vector<SideSubset>& all, const SideSubset& s) {
      return std::find(all.begin(), all.end(), s) != all.end();
    };
    EXPECT_TRUE(listed(horizontal, real.bottom)) << "seed " << seed;
    EXPECT_TRUE(listed(horizontal, real.top)) << "seed " << seed;
    EXPECT_TRUE(listed(vertical, real.left)) << "seed " << seed;
    EXPECT_TRUE(listed(vertical, real.right)) << "seed " << seed;

    // The realized boundary is one of the enumerated 4-cycles.
    bool enumerated = false;
    ForEachPerimeterCandidate(ps, {}, [&](const PerimeterCandidate& c) {
      enumerated = c == real;
      return !enumerated;
    });
    EXPECT_TRUE(enumerated) << "seed " << seed;

    EXPECT_TRUE(HoleCheck(real, ps).pass) << "seed " << seed;
    if (GapPreconditions(inst.witness)) {
      ++gap_checked;
      EXPECT_TRUE(GapCheck(real, ps, GapMode::kMixed).pass) << "seed " << seed;
    }
  }
  EXPECT_GT(instances, 1000);
  EXPECT_GT(gap_checked, 100);
}

}  // namespace
}  // namespace mondrian
