#include <algorithm>
#include <functional>
#include <numeric>

#include "mondrian/filters.hpp"

namespace mondrian {
namespace {

struct SpanItem {
  int entry;
  int class_id;
  std::int64_t span;
};

// Depth-first subset sum over items sorted by descending span. `emit`
// receives each hit (entries in search order) and returns false to stop.
class SubsetSearch {
 public:
  SubsetSearch(const PieceSet& ps, Axis axis, int min_size,
               std::function<bool(const std::vector<int>&)> emit)
      : target_(axis == Axis::kHorizontal ? ps.spec().width
                                          : ps.spec().height),
        min_size_(min_size),
        used_(ps.class_count(), false),
        emit_(std::move(emit)) {
    for (const Piece& p : ps.pieces()) {
      items_.push_back({p.index - 1, p.class_id,
                        axis == Axis::kHorizontal ? p.width : p.height});
    }
    std::sort(items_.begin(), items_.end(),
              [](const SpanItem& a, const SpanItem& b) {
                return a.span > b.span;
              });
    suffix_.assign(items_.size() + 1, 0);
    for (int i = static_cast<int>(items_.size()) - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1] + items_[i].span;
    }
  }

  // Returns false if the emitter asked to stop.
  bool Run() { return Recurse(0, target_); }

 private:
  bool Recurse(std::size_t i, std::int64_t remaining) {
    if (remaining == 0) {
      if (static_cast<int>(chosen_.size()) >= min_size_) return emit_(chosen_);
      return true;
    }
    if (i == items_.size() || suffix_[i] < remaining) return true;
    for (std::size_t j = i; j < items_.size(); ++j) {
      if (suffix_[j] < remaining) break;
      const SpanItem& item = items_[j];
      if (item.span > remaining || used_[item.class_id]) continue;
      used_[item.class_id] = true;
      chosen_.push_back(item.entry);
      const bool go_on = Recurse(j + 1, remaining - item.span);
      chosen_.pop_back();
      used_[item.class_id] = false;
      if (!go_on) return false;
    }
    return true;
  }

  std::int64_t target_;
  int min_size_;
  std::vector<SpanItem> items_;
  std::vector<std::int64_t> suffix_;
  std::vector<bool> used_;
  std::vector<int> chosen_;
  std::function<bool(const std::vector<int>&)> emit_;
};

}  // namespace

std::vector<SideSubset> SideSubsets(const PieceSet& ps, Axis axis,
                                    int min_size) {
  std::vector<SideSubset> out;
  const std::int64_t target =
      axis == Axis::kHorizontal ? ps.spec().width : ps.spec().height;
  SubsetSearch search(ps, axis, std::max(min_size, 1),
                      [&](const std::vector<int>& chosen) {
                        SideSubset s{axis, chosen, target};
                        std::sort(s.members.begin(), s.members.end());
                        out.push_back(std::move(s));
                        return true;
                      });
  search.Run();
  std::sort(out.begin(), out.end(),
            [](const SideSubset& a, const SideSubset& b) {
              return a.members < b.members;
            });
  return out;
}

bool HasSideSubset(const PieceSet& ps, Axis axis, int min_size) {
  bool found = false;
  SubsetSearch search(ps, axis, std::max(min_size, 1),
                      [&](const std::vector<int>&) {
                        found = true;
                        return false;
                      });
  search.Run();
  return found;
}

NeighborTable::NeighborTable(const std::vector<SideSubset>& vertical,
                             const std::vector<SideSubset>& horizontal)
    : of_vertical_(vertical.size()), of_horizontal_(horizontal.size()) {
  int max_entry = -1;
  for (const auto& s : horizontal) {
    for (int e : s.members) max_entry = std::max(max_entry, e);
  }
  std::vector<std::vector<int>> containing(max_entry + 1);
  for (int h = 0; h < static_cast<int>(horizontal.size()); ++h) {
    for (int e : horizontal[h].members) containing[e].push_back(h);
  }

  std::vector<int> hits(horizontal.size(), 0);
  std::vector<int> last_shared(horizontal.size(), -1);
  std::vector<int> touched;
  for (int v = 0; v < static_cast<int>(vertical.size()); ++v) {
    touched.clear();
    for (int e : vertical[v].members) {
      if (e > max_entry) continue;
      for (int h : containing[e]) {
        if (hits[h]++ == 0) touched.push_back(h);
        last_shared[h] = e;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int h : touched) {
      if (hits[h] == 1) {
        of_vertical_[v].push_back({h, last_shared[h]});
        of_horizontal_[h].push_back({v, last_shared[h]});
      }
      hits[h] = 0;
    }
  }
}

std::optional<int> NeighborTable::Shared(int v, int h) const {
  const auto& list = of_vertical_[v];
  auto it = std::lower_bound(
      list.begin(), list.end(), h,
      [](const Neighbor& n, int value) { return n.subset < value; });
  if (it == list.end() || it->subset != h) return std::nullopt;
  return it->shared_entry;
}

}  // namespace mondrian
