#include <algorithm>
#include <set>

#include "bitmask.hpp"
#include "mondrian/filters.hpp"

namespace mondrian {

std::vector<int> PerimeterCandidate::Entries() const {
  std::vector<int> all;
  for (const SideSubset* s : {&bottom, &top, &left, &right}) {
    all.insert(all.end(), s->members.begin(), s->members.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

namespace {

template <typename Mask>
struct SubsetMasks {
  Mask entries;
  Mask classes;
};

template <typename Mask>
class CycleSearch {
 public:
  CycleSearch(const PieceSet& ps, const PerimeterOptions& options)
      : ps_(ps), options_(options) {
    const int min_size = options.include_singletons ? 1 : 2;
    horizontal_ = SideSubsets(ps, Axis::kHorizontal, min_size);
    vertical_ = SideSubsets(ps, Axis::kVertical, min_size);
    table_.emplace(vertical_, horizontal_);

    const std::size_t k = ps.size();
    const std::size_t c = ps.class_count();
    full_width_ = Mask(k);
    full_height_ = Mask(k);
    for (int e = 0; e < ps.size(); ++e) {
      if (ps[e].width == ps.spec().width) full_width_.set(e);
      if (ps[e].height == ps.spec().height) full_height_.set(e);
    }
    auto masks_of = [&](const std::vector<SideSubset>& subsets) {
      std::vector<SubsetMasks<Mask>> out;
      out.reserve(subsets.size());
      for (const auto& s : subsets) {
        SubsetMasks<Mask> m{Mask(k), Mask(c)};
        for (int e : s.members) {
          m.entries.set(e);
          m.classes.set(ps[e].class_id);
        }
        out.push_back(std::move(m));
      }
      return out;
    };
    h_masks_ = masks_of(horizontal_);
    v_masks_ = masks_of(vertical_);
  }

  bool Run(const std::function<bool(const PerimeterCandidate&)>& visit) {
    const auto& table = *table_;
    for (int l = 0; l < static_cast<int>(vertical_.size()); ++l) {
      const auto& around_left = table.OfVertical(l);
      for (const Neighbor& b : around_left) {
        if (options_.should_stop && options_.should_stop()) return false;
        if (!Adjacent(v_masks_[l], h_masks_[b.subset])) continue;
        for (const Neighbor& t : around_left) {
          if (t.subset == b.subset) continue;
          if (!Adjacent(v_masks_[l], h_masks_[t.subset])) continue;
          if (!Opposite(h_masks_[b.subset], h_masks_[t.subset], full_height_)) {
            continue;
          }
          const Mask three = v_masks_[l].classes | h_masks_[b.subset].classes |
                             h_masks_[t.subset].classes;
          if (static_cast<std::int64_t>(three.count()) >
              ps_.spec().piece_count) {
            continue;
          }
          if (!CloseCycle(l, b, t, three, visit)) return false;
        }
      }
    }
    return true;
  }

 private:
  // Adjacent sides share exactly one entry (their corner) and no other class.
  static bool Adjacent(const SubsetMasks<Mask>& a, const SubsetMasks<Mask>& b) {
    return (a.classes & b.classes).count() == 1;
  }

  // Opposite sides share exactly their full-span pieces, as the same entries.
  static bool Opposite(const SubsetMasks<Mask>& a, const SubsetMasks<Mask>& b,
                       const Mask& full_span) {
    const Mask shared = a.entries & b.entries;
    if (!((a.entries & full_span) == shared)) return false;
    if (!((b.entries & full_span) == shared)) return false;
    return (a.classes & b.classes).count() == shared.count();
  }

  bool CloseCycle(int l, const Neighbor& b, const Neighbor& t,
                  const Mask& three,
                  const std::function<bool(const PerimeterCandidate&)>& visit) {
    const auto& below = table_->OfHorizontal(b.subset);
    const auto& above = table_->OfHorizontal(t.subset);
    auto i = below.begin();
    auto j = above.begin();
    while (i != below.end() && j != above.end()) {
      if (i->subset < j->subset) {
        ++i;
      } else if (j->subset < i->subset) {
        ++j;
      } else {
        const int r = i->subset;
        if (r != l && Adjacent(v_masks_[r], h_masks_[b.subset]) &&
            Adjacent(v_masks_[r], h_masks_[t.subset]) &&
            Opposite(v_masks_[l], v_masks_[r], full_width_) &&
            static_cast<std::int64_t>((three | v_masks_[r].classes).count()) <=
                ps_.spec().piece_count) {
          PerimeterCandidate cand{horizontal_[b.subset], horizontal_[t.subset],
                                  vertical_[l], vertical_[r],
                                  Corners{b.shared_entry, i->shared_entry,
                                          t.shared_entry, j->shared_entry}};
          if (!visit(cand)) return false;
        }
        ++i;
        ++j;
      }
    }
    return true;
  }

  const PieceSet& ps_;
  const PerimeterOptions& options_;
  std::vector<SideSubset> horizontal_;
  std::vector<SideSubset> vertical_;
  std::optional<NeighborTable> table_;
  std::vector<SubsetMasks<Mask>> h_masks_;
  std::vector<SubsetMasks<Mask>> v_masks_;
  Mask full_width_;
  Mask full_height_;
};

}  // namespace

bool ForEachPerimeterCandidate(
    const PieceSet& ps, const PerimeterOptions& options,
    const std::function<bool(const PerimeterCandidate&)>& visit) {
  if (ps.size() <= 64) {
    return CycleSearch<internal::Mask64>(ps, options).Run(visit);
  }
  return CycleSearch<internal::WideMask>(ps, options).Run(visit);
}

std::vector<PerimeterCandidate> PerimeterCandidates(
    const PieceSet& ps, const PerimeterOptions& options) {
  std::vector<PerimeterCandidate> out;
  ForEachPerimeterCandidate(ps, options, [&](const PerimeterCandidate& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

std::optional<std::string> CheckSide(const SideSubset& s, Axis axis,
                                     const PieceSet& ps, const char* name) {
  if (s.axis != axis) return std::string(name) + ": wrong axis";
  if (s.members.empty()) return std::string(name) + ": empty";
  std::int64_t sum = 0;
  std::set<int> classes;
  for (int e : s.members) {
    if (e < 0 || e >= ps.size()) return std::string(name) + ": bad entry";
    sum += axis == Axis::kHorizontal ? ps[e].width : ps[e].height;
    if (!classes.insert(ps[e].class_id).second) {
      return std::string(name) + ": repeated class";
    }
  }
  const std::int64_t want =
      axis == Axis::kHorizontal ? ps.spec().width : ps.spec().height;
  if (sum != want || s.span_sum != want) {
    return std::string(name) + ": spans do not sum to the board side";
  }
  return std::nullopt;
}

bool Contains(const SideSubset& s, int e) {
  return std::find(s.members.begin(), s.members.end(), e) != s.members.end();
}

}  // namespace

std::optional<std::string> ValidateCandidate(const PerimeterCandidate& cand,
                                             const PieceSet& ps) {
  if (auto err = CheckSide(cand.bottom, Axis::kHorizontal, ps, "bottom")) {
    return err;
  }
  if (auto err = CheckSide(cand.top, Axis::kHorizontal, ps, "top")) return err;
  if (auto err = CheckSide(cand.left, Axis::kVertical, ps, "left")) return err;
  if (auto err = CheckSide(cand.right, Axis::kVertical, ps, "right")) {
    return err;
  }

  // Each adjacent pair shares exactly its corner entry.
  struct Pair {
    const SideSubset* a;
    const SideSubset* b;
    int corner;
    const char* name;
  };
  const Corners& c = cand.corners;
  for (const Pair& p : {Pair{&cand.left, &cand.bottom, c.bottom_left, "BL"},
                        Pair{&cand.right, &cand.bottom, c.bottom_right, "BR"},
                        Pair{&cand.left, &cand.top, c.top_left, "TL"},
                        Pair{&cand.right, &cand.top, c.top_right, "TR"}}) {
    int shared = 0;
    for (int e : p.a->members) shared += Contains(*p.b, e) ? 1 : 0;
    if (shared != 1 || !Contains(*p.a, p.corner) || !Contains(*p.b, p.corner)) {
      return std::string("corner ") + p.name +
             " is not the unique shared entry of its sides";
    }
  }
  for (int e : cand.left.members) {
    if (Contains(cand.right, e) && ps[e].width != ps.spec().width) {
      return std::string("left and right share a piece narrower than W");
    }
  }
  for (int e : cand.bottom.members) {
    if (Contains(cand.top, e) && ps[e].height != ps.spec().height) {
      return std::string("bottom and top share a piece shorter than H");
    }
  }

  // Distinct entries must carry distinct classes.
  const std::vector<int> entries = cand.Entries();
  std::set<int> classes;
  for (int e : entries) {
    if (!classes.insert(ps[e].class_id).second) {
      return std::string("two perimeter entries are congruent");
    }
  }
  if (static_cast<std::int64_t>(classes.size()) > ps.spec().piece_count) {
    return std::string("perimeter uses more classes than the piece count");
  }
  return std::nullopt;
}

}  // namespace mondrian
