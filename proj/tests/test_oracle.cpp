#include <gtest/gtest.h>

#include "mondrian/oracle.hpp"
#include "mondrian/solver.hpp"

namespace mondrian {
namespace {

using oracle::NaiveStatus;

TEST(SubsetSumAll, WidthsOf84) {
  const std::vector<std::int64_t> widths{12, 14, 16, 18, 21, 24, 28,
                                         36, 42, 48, 56, 63, 72, 84};
  std::vector<oracle::SpanItem> items;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    items.push_back({static_cast<int>(std::min(i, widths.size() - 1 - i)),
                     widths[i]});
  }
  const auto all = oracle::SubsetSumAll(items, 84, 2);
  // {12, 72}: positions 0 and 12.
  EXPECT_NE(std::find(all.begin(), all.end(), std::vector<int>{0, 12}),
            all.end());
  for (const auto& s : all) EXPECT_GE(s.size(), 2u);
}

TEST(SubsetSumAll, EdgeCases) {
  const std::vector<oracle::SpanItem> items{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_TRUE(oracle::SubsetSumAll(items, 0, 1).empty());
  EXPECT_EQ(oracle::SubsetSumAll(items, 0, 0).size(), 1u);
  EXPECT_TRUE(oracle::SubsetSumAll(items, 7, 1).empty());
  const std::vector<oracle::SpanItem> same_class{{0, 1}, {0, 2}};
  EXPECT_TRUE(oracle::SubsetSumAll(same_class, 3, 1).empty());
}

TEST(NaiveTile, SmallExamples) {
  const auto r = oracle::NaiveTile(2, 3, oracle::EntriesWithRotations(
                                             {{1, 3}, {1, 1}, {2, 1}}, 2, 3));
  const auto solver = Solve(EngineProblem::Generic(
      2, 3, oracle::EntriesWithRotations({{1, 3}, {1, 1}, {2, 1}}, 2, 3)));
  EXPECT_EQ(r.status == NaiveStatus::kFound,
            solver.status == SolveStatus::kFound);

  // A 2x2 square in two orientations of one class covers only 4 of 9 cells.
  EXPECT_EQ(oracle::NaiveTile(3, 3, {{2, 2, 0}, {2, 2, 0}}).status,
            NaiveStatus::kExhausted);
  const auto line = oracle::NaiveTile(6, 1, {{1, 1, 0}, {2, 1, 1}, {3, 1, 2}});
  ASSERT_EQ(line.status, NaiveStatus::kFound);
  EXPECT_EQ(ValidateTiling(*line.tiling), std::nullopt);
}

TEST(EntriesWithRotations, DropsDuplicatesAndMisfits) {
  const auto e = oracle::EntriesWithRotations({{2, 2}, {1, 5}, {3, 1}}, 4, 4);
  // 2x2 once, 1x5 fits in neither orientation, 3x1 both ways.
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (Entry{2, 2, 0}));
  EXPECT_EQ(e[1], (Entry{3, 1, 2}));
  EXPECT_EQ(e[2], (Entry{1, 3, 2}));
}

TEST(RandomGuillotine, SingleCut) {
  const auto inst = oracle::RandomGuillotine(4, 6, 1, 3);
  ASSERT_EQ(inst.pieces.size(), 2u);
  const auto [a, b] = std::make_pair(inst.pieces[0], inst.pieces[1]);
  const bool vertical = a.second == 6 && b.second == 6 && a.first + b.first == 4;
  const bool horizontal = a.first == 4 && b.first == 4 && a.second + b.second == 6;
  EXPECT_TRUE(vertical || horizontal);
}

TEST(RandomGuillotine, InstancesArePartitions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int cuts = 1 + static_cast<int>(seed % 9);
    const auto inst = oracle::RandomGuillotine(32, 27, cuts, seed);
    ASSERT_EQ(inst.pieces.size(), static_cast<std::size_t>(cuts + 1));
    std::int64_t area = 0;
    std::set<std::pair<std::int64_t, std::int64_t>> shapes;
    for (auto [w, h] : inst.pieces) {
      area += w * h;
      EXPECT_TRUE(shapes.insert(std::minmax(w, h)).second);
    }
    EXPECT_EQ(area, 32 * 27);
    EXPECT_EQ(ValidateTiling(inst.witness), std::nullopt) << seed;
  }
}

TEST(RandomGuillotine, DeterministicPerSeed) {
  const auto a = oracle::RandomGuillotine(50, 40, 8, 1234);
  const auto b = oracle::RandomGuillotine(50, 40, 8, 1234);
  EXPECT_EQ(a.pieces, b.pieces);
  EXPECT_EQ(a.witness, b.witness);
  const auto c = oracle::RandomGuillotine(50, 40, 8, 1235);
  EXPECT_NE(a.pieces, c.pieces);
}

TEST(RandomGuillotine, FailsWhenImpossible) {
  // A 1x2 board cannot hold three pieces.
  EXPECT_THROW(oracle::RandomGuillotine(1, 2, 2, 1, 50),
               oracle::GenerationFailed);
  EXPECT_THROW(oracle::RandomGuillotine(4, 4, 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace mondrian
