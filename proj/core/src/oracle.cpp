#include "mondrian/oracle.hpp"

#include <algorithm>
#include <random>

namespace mondrian::oracle {

std::vector<std::vector<int>> SubsetSumAll(const std::vector<SpanItem>& items,
                                           std::int64_t target, int min_size) {
  const int k = static_cast<int>(items.size());
  if (k > 24) throw std::invalid_argument("power set too large");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<int> members;
    std::int64_t sum = 0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        members.push_back(i);
        sum += items[i].span;
      }
    }
    if (sum != target || static_cast<int>(members.size()) < min_size) continue;
    bool distinct = true;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (items[members[a]].class_id == items[members[b]].class_id) {
          distinct = false;
        }
      }
    }
    if (distinct) out.push_back(members);
  }
  return out;
}

namespace {

struct Grid {
  std::int64_t w, h;
  std::vector<int> cell;  // -1 empty, else placement number

  bool Free(std::int64_t x, std::int64_t y, std::int64_t pw,
            std::int64_t ph) const {
    if (x + pw > w || y + ph > h) return false;
    for (std::int64_t j = y; j < y + ph; ++j) {
      for (std::int64_t i = x; i < x + pw; ++i) {
        if (cell[j * w + i] != -1) return false;
      }
    }
    return true;
  }

  void Fill(std::int64_t x, std::int64_t y, std::int64_t pw, std::int64_t ph,
            int v) {
    for (std::int64_t j = y; j < y + ph; ++j) {
      for (std::int64_t i = x; i < x + pw; ++i) cell[j * w + i] = v;
    }
  }
};

bool Cover(Grid& g, const std::vector<Entry>& entries, std::vector<bool>& used,
           std::vector<PlacedPiece>& placed) {
  std::int64_t first = -1;
  for (std::int64_t c = 0; c < g.w * g.h; ++c) {
    if (g.cell[c] == -1) {
      first = c;
      break;
    }
  }
  if (first == -1) return true;
  const std::int64_t x = first % g.w;
  const std::int64_t y = first / g.w;
  for (const Entry& e : entries) {
    if (used[e.class_id] || !g.Free(x, y, e.width, e.height)) continue;
    used[e.class_id] = true;
    g.Fill(x, y, e.width, e.height, static_cast<int>(placed.size()));
    placed.push_back({x, y, e.width, e.height, e.class_id});
    if (Cover(g, entries, used, placed)) return true;
    placed.pop_back();
    g.Fill(x, y, e.width, e.height, -1);
    used[e.class_id] = false;
  }
  return false;
}

}  // namespace

NaiveResult NaiveTile(std::int64_t width, std::int64_t height,
                      const std::vector<Entry>& entries) {
  if (width < 1 || height < 1) throw std::invalid_argument("empty board");
  int classes = 0;
  for (const Entry& e : entries) classes = std::max(classes, e.class_id + 1);
  Grid g{width, height, std::vector<int>(width * height, -1)};
  std::vector<bool> used(classes, false);
  std::vector<PlacedPiece> placed;
  if (!Cover(g, entries, used, placed)) return {};
  return {NaiveStatus::kFound, Tiling{width, height, std::move(placed)}};
}

std::vector<Entry> EntriesWithRotations(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pieces,
    std::int64_t board_width, std::int64_t board_height) {
  std::vector<Entry> out;
  int cls = 0;
  for (const auto& [w, h] : pieces) {
    if (w <= board_width && h <= board_height) out.push_back({w, h, cls});
    if (w != h && h <= board_width && w <= board_height) {
      out.push_back({h, w, cls});
    }
    ++cls;
  }
  return out;
}

namespace {

struct Cell {
  PlacedPiece rect;
  int axis;  // 0: next cut is vertical, 1: horizontal
};

bool Congruent(const PlacedPiece& a, const PlacedPiece& b) {
  return std::minmax(a.width, a.height) == std::minmax(b.width, b.height);
}

}  // namespace

GuillotineInstance RandomGuillotine(std::int64_t width, std::int64_t height,
                                    int cuts, std::uint64_t seed,
                                    int retry_budget) {
  if (cuts < 1) throw std::invalid_argument("cuts must be at least 1");
  if (width < 1 || height < 1) throw std::invalid_argument("empty board");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t n) { return rng() % n; };

  std::vector<Cell> cells{
      {{0, 0, width, height, 0}, static_cast<int>(draw(2))}};
  int failures = 0;
  while (static_cast<int>(cells.size()) < cuts + 1) {
    const std::size_t pick = draw(cells.size());
    const Cell c = cells[pick];
    const std::int64_t side = c.axis == 0 ? c.rect.width : c.rect.height;
    bool ok = side >= 2;
    Cell lo = c, hi = c;
    if (ok) {
      const std::int64_t off = 1 + static_cast<std::int64_t>(draw(side - 1));
      if (c.axis == 0) {
        lo.rect.width = off;
        hi.rect.x += off;
        hi.rect.width -= off;
      } else {
        lo.rect.height = off;
        hi.rect.y += off;
        hi.rect.height -= off;
      }
      lo.axis = hi.axis = 1 - c.axis;
      ok = !Congruent(lo.rect, hi.rect);
      for (std::size_t i = 0; ok && i < cells.size(); ++i) {
        if (i == pick) continue;
        ok = !Congruent(cells[i].rect, lo.rect) &&
             !Congruent(cells[i].rect, hi.rect);
      }
    }
    if (!ok) {
      if (++failures > retry_budget) {
        throw GenerationFailed("guillotine generation ran out of retries");
      }
      continue;
    }
    cells[pick] = lo;
    cells.push_back(hi);
  }

  GuillotineInstance inst{width, height, seed, {}, {width, height, {}}};
  int cls = 0;
  for (Cell& c : cells) {
    c.rect.class_id = cls++;
    inst.pieces.emplace_back(c.rect.width, c.rect.height);
    inst.witness.pieces.push_back(c.rect);
  }
  return inst;
}

}  // namespace mondrian::oracle
