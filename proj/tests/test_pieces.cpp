#include <gtest/gtest.h>

#include <numeric>

#include "mondrian/pieces.hpp"
#include "support.hpp"

namespace mondrian {
namespace {

using testing::NaiveDivisors;
using testing::NaiveWidths;
using testing::Ps;

TEST(Divisors, SmallValues) {
  EXPECT_EQ(Divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(Divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(Divisors, ThousandAndEight) {
  const auto d = Divisors(1008);
  EXPECT_EQ(d.size(), 30u);
  EXPECT_EQ(d.back(), 1008);
  EXPECT_EQ(d, NaiveDivisors(1008));
}

TEST(Divisors, MatchesNaiveUpToThreeThousand) {
  for (std::int64_t x = 1; x <= 3000; ++x) {
    ASSERT_EQ(Divisors(x), NaiveDivisors(x)) << x;
  }
}

TEST(MakeCase, RejectsBadInput) {
  EXPECT_THROW(MakeCase(0, 5, 1), std::invalid_argument);
  EXPECT_THROW(MakeCase(5, 5, 7), std::invalid_argument);
  EXPECT_THROW(MakeCase(kMaxBoardSide + 1, 1, 1), std::invalid_argument);
  const CaseSpec c = MakeCase(84, 84, 7);
  EXPECT_EQ(c.piece_area, 1008);
}

TEST(EnumerateCases, FiveByFiveHasNone) {
  EXPECT_TRUE(EnumerateCases(5, 5).empty());
}

TEST(EnumerateCases, ContainsKnownCases) {
  auto has = [](std::int64_t n, std::int64_t r) {
    const auto cases = EnumerateCases(n, n);
    return std::any_of(cases.begin(), cases.end(),
                       [&](const CaseSpec& c) { return c.piece_count == r; });
  };
  EXPECT_TRUE(has(84, 7));
  EXPECT_TRUE(has(360, 12));
}

TEST(EnumerateCases, AscendingAndFeasible) {
  for (std::int64_t w = 1; w <= 40; ++w) {
    for (std::int64_t h = 1; h <= 40; ++h) {
      const auto cases = EnumerateCases(w, h);
      for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_GE(cases[i].piece_count, 7);
        if (i > 0) {
          EXPECT_LT(cases[i - 1].piece_count, cases[i].piece_count);
        }
        EXPECT_TRUE(std::holds_alternative<PieceSet>(MakePieceSet(cases[i])));
      }
      // Every r >= 7 not listed must be infeasible.
      for (std::int64_t r = 7; r <= w * h; ++r) {
        if ((w * h) % r != 0) continue;
        const bool listed =
            std::any_of(cases.begin(), cases.end(),
                        [&](const CaseSpec& c) { return c.piece_count == r; });
        EXPECT_EQ(listed,
                  std::holds_alternative<PieceSet>(MakePieceSet(w, h, r)))
            << w << "x" << h << " r=" << r;
      }
    }
  }
}

TEST(EnumerateCases, LemmaAuditLowersTheBound) {
  EnumerateOptions o;
  o.min_pieces = 2;
  const auto cases = EnumerateCases(12, 12, o);
  ASSERT_FALSE(cases.empty());
  EXPECT_LT(cases.front().piece_count, 7);
}

TEST(PieceSet, Board84) {
  const PieceSet ps = Ps(84, 84, 7);
  EXPECT_EQ(ps.size(), 14);
  EXPECT_EQ(ps.class_count(), 7);
  EXPECT_EQ(ps[0].width, 12);
  EXPECT_EQ(ps[0].height, 84);
  EXPECT_EQ(ps[1].width, 14);
  EXPECT_EQ(ps[1].height, 72);
  EXPECT_EQ(ps[2].width, 16);
  EXPECT_EQ(ps[2].height, 63);
  std::vector<std::int64_t> widths;
  for (const Piece& p : ps.pieces()) widths.push_back(p.width);
  EXPECT_EQ(widths, NaiveWidths(84, 84, 1008));
  EXPECT_EQ(widths, (std::vector<std::int64_t>{12, 14, 16, 18, 21, 24, 28, 36,
                                               42, 48, 56, 63, 72, 84}));
}

TEST(PieceSet, Board84UsesExactDivisorPairs) {
  // 18x48, 21x42, 24x36 and 28x28 do not have area 1008; the exact pairs do.
  const PieceSet ps = Ps(84, 84, 7);
  EXPECT_EQ(testing::EntryOf(ps, {18, 48}), -1);
  EXPECT_GE(testing::EntryOf(ps, {18, 56}), 0);
  EXPECT_GE(testing::EntryOf(ps, {21, 48}), 0);
  EXPECT_GE(testing::EntryOf(ps, {24, 42}), 0);
  EXPECT_GE(testing::EntryOf(ps, {28, 36}), 0);
}

TEST(PieceSet, Board360) {
  const PieceSet ps = Ps(360, 360, 12);
  EXPECT_EQ(static_cast<std::size_t>(ps.size()),
            NaiveWidths(360, 360, 10800).size());
  EXPECT_EQ(ps.size(), 26);
  EXPECT_EQ(ps.class_count(), 13);
  EXPECT_GE(testing::EntryOf(ps, {240, 45}), 0);
  EXPECT_GE(testing::EntryOf(ps, {50, 216}), 0);
  EXPECT_GE(testing::EntryOf(ps, {36, 300}), 0);
}

TEST(PieceSet, Board60NinePiecesInfeasible) {
  const PieceSetResult r = MakePieceSet(60, 60, 9);
  ASSERT_TRUE(std::holds_alternative<InfeasibleCase>(r));
  const auto& bad = std::get<InfeasibleCase>(r);
  EXPECT_EQ(bad.reason, Infeasibility::kTooFewClasses);
  EXPECT_EQ(bad.class_count, 4);
  EXPECT_EQ(NaiveWidths(60, 60, 400),
            (std::vector<std::int64_t>{8, 10, 16, 20, 25, 40, 50}));
}

TEST(PieceSet, NonDivisorIsInfeasible) {
  const PieceSetResult r = MakePieceSet(5, 5, 7);
  ASSERT_TRUE(std::holds_alternative<InfeasibleCase>(r));
  EXPECT_EQ(std::get<InfeasibleCase>(r).reason, Infeasibility::kNotDivisor);
}

// Structural invariants over every feasible case of many boards.
TEST(PieceSet, InvariantsHoldOnAllSmallBoards) {
  for (std::int64_t w = 1; w <= 60; ++w) {
    for (std::int64_t h = 1; h <= 60; ++h) {
      for (const CaseSpec& c : EnumerateCases(w, h)) {
        const PieceSet ps = Ps(w, h, c.piece_count);
        const int k = ps.size();
        std::set<std::int64_t> ws, hs;
        for (int i = 0; i < k; ++i) {
          const Piece& p = ps[i];
          EXPECT_EQ(p.width * p.height, c.piece_area);
          EXPECT_LE(p.width, w);
          EXPECT_LE(p.height, h);
          EXPECT_EQ(p.index, i + 1);
          ws.insert(p.width);
          hs.insert(p.height);
          if (i > 0) {
            EXPECT_LT(ps[i - 1].width, p.width);
            EXPECT_GT(ps[i - 1].height, p.height);
          }
          // Rotation pairing is an involution when it exists.
          if (auto j = ps.RotationOf(i)) {
            EXPECT_EQ(ps[*j].width, p.height);
            EXPECT_EQ(ps[*j].class_id, p.class_id);
            EXPECT_EQ(ps.RotationOf(*j), i);
          }
        }
        EXPECT_EQ(static_cast<int>(ws.size()), k);
        EXPECT_EQ(static_cast<int>(hs.size()), k);
        EXPECT_GE(ps.class_count(), c.piece_count);
        // Any r pieces of distinct classes cover exactly the board area.
        EXPECT_EQ(c.piece_area * c.piece_count, w * h);
        if (w == h) {
          EXPECT_EQ(ps.class_count(), (k + 1) / 2);
          for (int i = 0; i < k; ++i) {
            EXPECT_EQ(ps[i].width, ps[k - 1 - i].height);
            EXPECT_EQ(ps[i].class_id, ps[k - 1 - i].class_id);
          }
          if (k % 2 == 1) {
            EXPECT_EQ(ps[k / 2].width, ps[k / 2].height);
          }
        }
      }
    }
  }
}

TEST(PieceSet, TransposeSwapsDimensions) {
  for (std::int64_t w = 1; w <= 48; ++w) {
    for (std::int64_t h = w + 1; h <= 48; ++h) {
      for (const CaseSpec& c : EnumerateCases(w, h)) {
        const PieceSet a = Ps(w, h, c.piece_count);
        const PieceSet b = Ps(h, w, c.piece_count);
        ASSERT_EQ(a.size(), b.size());
        ASSERT_EQ(a.class_count(), b.class_count());
        std::set<testing::Dims> da, db;
        for (const Piece& p : a.pieces()) da.insert({p.height, p.width});
        for (const Piece& p : b.pieces()) db.insert({p.width, p.height});
        EXPECT_EQ(da, db);
      }
    }
  }
}

TEST(PieceSet, ClassesGroupCongruentEntries) {
  int checked = 0;
  for (std::int64_t w = 20; w <= 60; w += 4) {
    for (std::int64_t h = w + 6; h <= 90; h += 6) {
      for (const CaseSpec& spec : EnumerateCases(w, h)) {
        const PieceSet ps = Ps(w, h, spec.piece_count);
        ++checked;
        for (int c = 0; c < ps.class_count(); ++c) {
          const auto& e = ps.EntriesOfClass(c);
          ASSERT_FALSE(e.empty());
          ASSERT_LE(e.size(), 2u);
          const auto shape = std::minmax(ps[e[0]].width, ps[e[0]].height);
          for (int i : e) {
            EXPECT_EQ(std::minmax(ps[i].width, ps[i].height), shape);
          }
        }
        // Class ids are ordered by the shorter side.
        for (int c = 1; c < ps.class_count(); ++c) {
          const Piece& a = ps[ps.EntriesOfClass(c - 1)[0]];
          const Piece& b = ps[ps.EntriesOfClass(c)[0]];
          EXPECT_LT(std::min(a.width, a.height), std::min(b.width, b.height));
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(CountClasses, AgreesWithPieceSet) {
  for (std::int64_t n = 1; n <= 120; ++n) {
    for (const CaseSpec& c : EnumerateCases(n, n)) {
      EXPECT_EQ(CountClasses(n, n, c.piece_area),
                Ps(n, n, c.piece_count).class_count());
    }
  }
}

}  // namespace
}  // namespace mondrian
