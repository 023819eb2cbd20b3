#include <algorithm>
#include <bit>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "mondrian/filters.hpp"

namespace mondrian {

std::optional<std::vector<std::pair<int, std::int64_t>>> GroupedSubsetSum(
    const std::vector<std::vector<std::int64_t>>& options_per_group,
    std::int64_t target) {
  if (target < 0) return std::nullopt;
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  const std::size_t width = static_cast<std::size_t>(target) + 1;
  std::vector<Bits> layers;
  layers.reserve(options_per_group.size() + 1);
  layers.emplace_back(width);
  layers.back().set(0);
  for (const auto& options : options_per_group) {
    Bits next = layers.back();
    for (std::int64_t len : options) {
      if (len > 0 && len <= target) next |= layers.back() << len;
    }
    layers.push_back(std::move(next));
  }
  if (!layers.back().test(target)) return std::nullopt;

  std::vector<std::pair<int, std::int64_t>> chosen;
  std::int64_t s = target;
  for (int g = static_cast<int>(options_per_group.size()); g > 0; --g) {
    if (layers[g - 1].test(s)) continue;
    for (std::int64_t len : options_per_group[g - 1]) {
      if (len > 0 && len <= s && layers[g - 1].test(s - len)) {
        chosen.emplace_back(g - 1, len);
        s -= len;
        break;
      }
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

struct SideFrame {
  BoardSide side;
  const SideSubset* members;
  bool horizontal;  // true for bottom/top: span is width, extent is height
  int start_corner;
  int end_corner;
  // The side meeting this one at each corner, with that side's two corners.
  const SideSubset* start_adjacent;
  int start_adjacent_far;
  const SideSubset* end_adjacent;
  int end_adjacent_far;
  // The parallel side and its two corners.
  const SideSubset* opposite;
  int opposite_start;
  int opposite_end;
};

// Pieces of `adjacent` that can sit directly next to `corner` along that side.
std::vector<int> RestingChoices(const SideSubset& adjacent, int corner,
                                int far_corner) {
  std::vector<int> interior;
  for (int e : adjacent.members) {
    if (e != corner && e != far_corner) interior.push_back(e);
  }
  if (!interior.empty()) return interior;
  if (far_corner != corner) return {far_corner};
  return {};
}

std::vector<bool> UsedClasses(const PerimeterCandidate& cand,
                              const PieceSet& ps) {
  std::vector<bool> used(ps.class_count(), false);
  for (int e : cand.Entries()) used[ps[e].class_id] = true;
  return used;
}

// A full-span piece touches two opposite board sides, so it can only be part
// of a tiling as a perimeter piece.
bool FullSpan(const PieceSet& ps, int e) {
  return ps[e].width == ps.spec().width || ps[e].height == ps.spec().height;
}

// Filler lengths each unused class offers along one direction. MIXED gives a
// single palette with every orientation; STRICT gives two palettes, all short
// sides or all long sides.
using Palette = std::vector<std::pair<int, std::vector<std::int64_t>>>;

std::vector<Palette> Palettes(bool horizontal, const PieceSet& ps,
                              const std::vector<bool>& used, GapMode mode) {
  auto along = [&](const Piece& p) { return horizontal ? p.width : p.height; };
  std::vector<Palette> out;
  if (mode == GapMode::kMixed) {
    Palette palette;
    for (int c = 0; c < ps.class_count(); ++c) {
      if (used[c]) continue;
      std::vector<std::int64_t> lens;
      for (int e : ps.EntriesOfClass(c)) {
        if (!FullSpan(ps, e)) lens.push_back(along(ps[e]));
      }
      std::sort(lens.begin(), lens.end());
      lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
      if (!lens.empty()) palette.emplace_back(c, std::move(lens));
    }
    out.push_back(std::move(palette));
    return out;
  }
  for (bool short_side : {true, false}) {
    Palette palette;
    for (int c = 0; c < ps.class_count(); ++c) {
      if (used[c]) continue;
      for (int e : ps.EntriesOfClass(c)) {
        const Piece& p = ps[e];
        const std::int64_t want = short_side ? std::min(p.width, p.height)
                                             : std::max(p.width, p.height);
        if (!FullSpan(ps, e) && along(p) == want) {
          palette.push_back({c, {want}});
          break;
        }
      }
    }
    out.push_back(std::move(palette));
  }
  return out;
}

// One way to fill one side's gap.
struct FillOption {
  std::vector<int> resting;
  std::int64_t extent = 0;
  std::uint64_t classes = 0;
  std::vector<std::int64_t> lengths;
  std::vector<int> length_classes;
};

// Enumerates class-distinct fillers of `gap` with at most `budget` pieces.
// Stops once `cap` distinct class sets are collected and reports saturation.
class FillerSearch {
 public:
  FillerSearch(const Palette& palette, std::int64_t gap, int budget,
               std::size_t cap)
      : palette_(palette), budget_(budget), cap_(cap) {
    suffix_.assign(palette.size() + 1, 0);
    for (int i = static_cast<int>(palette.size()) - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1] + palette[i].second.back();
    }
    Recurse(0, gap);
  }

  std::vector<FillOption> found;
  bool saturated = false;

 private:
  void Recurse(std::size_t i, std::int64_t remaining) {
    if (saturated) return;
    if (remaining == 0) {
      std::uint64_t mask = 0;
      for (int c : classes_) {
        if (c < 64) mask |= std::uint64_t{1} << c;
      }
      if (!seen_.insert(mask).second) return;
      if (found.size() >= cap_) {
        saturated = true;
        return;
      }
      found.push_back({{}, 0, mask, lengths_, classes_});
      return;
    }
    if (static_cast<int>(classes_.size()) >= budget_) return;
    for (std::size_t j = i; j < palette_.size(); ++j) {
      if (suffix_[j] < remaining) return;
      for (std::int64_t len : palette_[j].second) {
        if (len > remaining) break;
        classes_.push_back(palette_[j].first);
        lengths_.push_back(len);
        Recurse(j + 1, remaining - len);
        lengths_.pop_back();
        classes_.pop_back();
      }
    }
  }

  const Palette& palette_;
  int budget_;
  std::size_t cap_;
  std::vector<std::int64_t> suffix_;
  std::vector<int> classes_;
  std::vector<std::int64_t> lengths_;
  std::set<std::uint64_t> seen_;
};

constexpr std::size_t kMaxFillersPerSide = 20000;

struct SideOptions {
  SideGap gap;                       // diagnostics for the side
  std::vector<FillOption> options;   // every distinct filler class set
  bool unconstrained = false;        // too many fillers to combine
};

SideOptions CheckSide(const SideFrame& frame, const PieceSet& ps,
                      const std::vector<bool>& used, GapMode mode,
                      int budget) {
  auto span = [&](int e) {
    return frame.horizontal ? ps[e].width : ps[e].height;
  };
  auto extent = [&](int e) {
    return frame.horizontal ? ps[e].height : ps[e].width;
  };

  SideOptions out;
  SideGap& gap = out.gap;
  gap.side = frame.side;
  gap.min_piece = *std::min_element(
      frame.members->members.begin(), frame.members->members.end(),
      [&](int a, int b) { return extent(a) < extent(b); });

  std::vector<int> start_choices{-1};
  std::vector<int> end_choices{-1};
  if (gap.min_piece == frame.start_corner) {
    auto c = RestingChoices(*frame.start_adjacent, frame.start_corner,
                            frame.start_adjacent_far);
    if (!c.empty()) start_choices = c;
  }
  if (gap.min_piece == frame.end_corner) {
    auto c = RestingChoices(*frame.end_adjacent, frame.end_corner,
                            frame.end_adjacent_far);
    if (!c.empty()) end_choices = c;
  }

  std::vector<Palette> palettes = Palettes(frame.horizontal, ps, used, mode);
  // A piece standing on the shortest piece may reach the far edge; it then
  // belongs to the parallel side, as one of its interior pieces.
  const std::int64_t reach =
      (frame.horizontal ? ps.spec().height : ps.spec().width) -
      extent(gap.min_piece);
  int extras = 0;
  for (int e : frame.opposite->members) {
    if (e == frame.opposite_start || e == frame.opposite_end) continue;
    if (extent(e) != reach) continue;
    for (Palette& palette : palettes) {
      palette.push_back({ps[e].class_id, {span(e)}});
    }
    ++extras;
  }
  bool recorded = false;
  for (int rs : start_choices) {
    for (int re : end_choices) {
      if (rs >= 0 && rs == re) continue;
      std::vector<int> resting;
      std::int64_t length = span(gap.min_piece);
      if (rs >= 0) {
        length -= span(rs);
        resting.push_back(rs);
      }
      if (re >= 0) {
        length -= span(re);
        resting.push_back(re);
      }
      if (!recorded || (gap.extent <= 0 && length > 0)) {
        gap.resting = resting;
        gap.extent = length;
        recorded = true;
      }
      if (length < 0) continue;
      if (length == 0) {
        // The resting pieces cover the shortest piece exactly.
        FillOption none;
        none.resting = resting;
        out.options.push_back(std::move(none));
        continue;
      }
      for (const Palette& palette : palettes) {
        FillerSearch search(palette, length, budget + extras,
                            kMaxFillersPerSide);
        out.unconstrained = out.unconstrained || search.saturated;
        for (FillOption& f : search.found) {
          f.resting = resting;
          f.extent = length;
          out.options.push_back(std::move(f));
        }
      }
    }
  }
  if (!out.options.empty()) {
    const FillOption& first = out.options.front();
    gap.fillable = true;
    gap.resting = first.resting;
    gap.extent = first.extent;
    gap.witness = first.lengths;
    gap.witness_classes = first.length_classes;
  } else if (out.unconstrained) {
    gap.fillable = true;
  }
  return out;
}

// Picks one filler per side so that all fillers together use at most `budget`
// classes. Returns the chosen option index per side (-1 for unconstrained
// sides).
bool CombineSides(const std::array<SideOptions, 4>& sides, std::size_t side,
                  std::uint64_t used, std::uint64_t free_classes, int budget,
                  std::array<int, 4>& chosen) {
  if (side == sides.size()) return true;
  if (sides[side].unconstrained) {
    chosen[side] = -1;
    return CombineSides(sides, side + 1, used, free_classes, budget,
                        chosen);
  }
  const auto& options = sides[side].options;
  for (std::size_t i = 0; i < options.size(); ++i) {
    const std::uint64_t next = used | options[i].classes;
    if (std::popcount(next & ~free_classes) > budget) continue;
    chosen[side] = static_cast<int>(i);
    if (CombineSides(sides, side + 1, next, free_classes, budget, chosen)) {
      return true;
    }
  }
  return false;
}

}  // namespace

GapResult GapCheck(const PerimeterCandidate& cand, const PieceSet& ps,
                   GapMode mode) {
  const Corners& c = cand.corners;
  const std::array<SideFrame, 4> frames{{
      {BoardSide::kBottom, &cand.bottom, true, c.bottom_left, c.bottom_right,
       &cand.left, c.top_left, &cand.right, c.top_right, &cand.top,
       c.top_left, c.top_right},
      {BoardSide::kRight, &cand.right, false, c.bottom_right, c.top_right,
       &cand.bottom, c.bottom_left, &cand.top, c.top_left, &cand.left,
       c.bottom_left, c.top_left},
      {BoardSide::kTop, &cand.top, true, c.top_left, c.top_right, &cand.left,
       c.bottom_left, &cand.right, c.bottom_right, &cand.bottom,
       c.bottom_left, c.bottom_right},
      {BoardSide::kLeft, &cand.left, false, c.bottom_left, c.top_left,
       &cand.bottom, c.bottom_right, &cand.top, c.top_right, &cand.right,
       c.bottom_right, c.top_right},
  }};
  const std::vector<bool> used = UsedClasses(cand, ps);
  const int used_count =
      static_cast<int>(std::count(used.begin(), used.end(), true));
  GapResult result;
  result.filler_budget =
      static_cast<int>(ps.spec().piece_count) - used_count;

  std::array<SideOptions, 4> sides;
  result.pass = true;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    sides[i] = CheckSide(frames[i], ps, used, mode, result.filler_budget);
    result.sides[i] = sides[i].gap;
    result.pass = result.pass && sides[i].gap.fillable;
  }
  if (!result.pass) return result;

  // Fillers are non-perimeter pieces, and only r - p of those exist.
  if (ps.class_count() > 64) return result;
  std::array<int, 4> chosen{};
  std::uint64_t perimeter_classes = 0;
  for (int k = 0; k < ps.class_count(); ++k) {
    if (used[k]) perimeter_classes |= std::uint64_t{1} << k;
  }
  result.pass = CombineSides(sides, 0, 0, perimeter_classes,
                             result.filler_budget, chosen);
  result.jointly_fillable = result.pass;
  if (result.pass) {
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (chosen[i] < 0) continue;
      const FillOption& f = sides[i].options[chosen[i]];
      SideGap& g = result.sides[i];
      g.resting = f.resting;
      g.extent = f.extent;
      g.witness = f.lengths;
      g.witness_classes = f.length_classes;
    }
  }
  return result;
}

HoleResult HoleCheck(const PerimeterCandidate& cand, const PieceSet& ps) {
  auto min_of = [&](const SideSubset& s, bool width) {
    std::int64_t m = width ? ps.spec().width : ps.spec().height;
    for (int e : s.members) m = std::min(m, width ? ps[e].width : ps[e].height);
    return m;
  };
  HoleResult out;
  out.max_hole_width =
      ps.spec().width - min_of(cand.left, true) - min_of(cand.right, true);
  out.max_hole_height =
      ps.spec().height - min_of(cand.bottom, false) - min_of(cand.top, false);

  const std::vector<bool> used = UsedClasses(cand, ps);
  for (int c = 0; c < ps.class_count(); ++c) {
    if (used[c]) {
      ++out.used_classes;
      continue;
    }
    bool fits = false;
    for (int e : ps.EntriesOfClass(c)) {
      fits = fits || (ps[e].width <= out.max_hole_width &&
                      ps[e].height <= out.max_hole_height);
    }
    if (fits) {
      ++out.fitting_classes;
    } else {
      out.non_fitting_classes.push_back(c);
    }
  }
  out.pass = out.fitting_classes >= ps.spec().piece_count - out.used_classes;
  return out;
}

}  // namespace mondrian
