#include "mondrian/solver.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mondrian/skyline.hpp"

namespace mondrian {

namespace {

using Clock = std::chrono::steady_clock;

unsigned TouchMask(std::int64_t x, std::int64_t y, std::int64_t w,
                   std::int64_t h, std::int64_t bw, std::int64_t bh) {
  unsigned m = 0;
  if (y == 0) m |= kTouchBottom;
  if (x + w == bw) m |= kTouchRight;
  if (y + h == bh) m |= kTouchTop;
  if (x == 0) m |= kTouchLeft;
  return m;
}

struct Step {
  int entry;
  std::int64_t x;
  std::int64_t y;
};

enum class Outcome { kFound, kExhausted, kAborted };

// One depth-first search over a private skyline.
class Searcher {
 public:
  Searcher(const EngineProblem& p, const std::atomic<bool>* cancel,
           Clock::time_point start)
      : p_(p),
        e_(p.entries()),
        sky_(p.width(), p.height()),
        used_(p.class_count(), 0),
        cancel_(cancel),
        start_(start) {
    if (p.symmetry() == Symmetry::kSquare || p.symmetry() == Symmetry::kMirror)
      sym_ = p.symmetry();
    if (p.touch()) touch_ = &*p.touch();
    if (p.options().limits.max_nodes) {
      max_nodes_ = *p.options().limits.max_nodes;
    }
  }

  // Candidate entries at the current slot, in search order.
  template <typename F>
  void ForEachMove(const Skyline::Slot& s, F&& f) {
    const std::int64_t room = p_.height() - s.base;
    for (int i = 0; i < static_cast<int>(e_.size()); ++i) {
      const Entry& en = e_[i];
      if (en.width > s.flat_width) break;
      if (used_[en.class_id] || en.height > room) continue;
      if (!Admissible(i, s)) continue;
      if (!f(i)) return;
    }
  }

  bool Push(int i, const Skyline::Slot& s) {
    const Entry& en = e_[i];
    if (!sky_.Place(s.x, en.width, en.height)) return false;
    used_[en.class_id] = 1;
    steps_.push_back({i, s.x, s.base});
    return true;
  }

  void Pop() {
    const Step st = steps_.back();
    steps_.pop_back();
    const Entry& en = e_[st.entry];
    sky_.Unplace(st.x, en.width, en.height);
    used_[en.class_id] = 0;
  }

  Outcome Dfs() {
    ++nodes_;
    if (nodes_ > max_nodes_) {
      limit_hit_ = true;
      return Outcome::kAborted;
    }
    if (nodes_ % 4096 == 0 && ShouldStop()) return Outcome::kAborted;
    max_depth_ = std::max<int>(max_depth_, static_cast<int>(steps_.size()));
    const auto slot = sky_.LowestSlot();
    if (!slot) return Outcome::kFound;
    if (slot->flat_width < MinUnusedWidth()) return Outcome::kExhausted;
    Outcome out = Outcome::kExhausted;
    ForEachMove(*slot, [&](int i) {
      if (!Push(i, *slot)) return true;
      out = Dfs();
      if (out == Outcome::kFound) return false;
      Pop();
      return out != Outcome::kAborted;
    });
    return out;
  }

  Tiling Result() const {
    Tiling t{p_.width(), p_.height(), {}};
    for (const Step& st : steps_) {
      const Entry& en = e_[st.entry];
      t.pieces.push_back({st.x, st.y, en.width, en.height, en.class_id});
    }
    return t;
  }

  bool ShouldStop() {
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
    const auto& lim = p_.options().limits;
    if (lim.max_time && Clock::now() - start_ > *lim.max_time) {
      limit_hit_ = true;
      return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  int max_depth() const { return max_depth_; }
  bool limit_hit() const { return limit_hit_; }
  const std::vector<Step>& steps() const { return steps_; }
  Skyline& sky() { return sky_; }

 private:
  std::int64_t MinUnusedWidth() const {
    for (const Entry& en : e_) {
      if (!used_[en.class_id]) return en.width;
    }
    return p_.width() + 1;
  }

  bool Admissible(int i, const Skyline::Slot& s) const {
    const Entry& en = e_[i];
    if (touch_) {
      const unsigned need = (*touch_)[i];
      if (need == 0xFFu) return false;
      if (TouchMask(s.x, s.base, en.width, en.height, p_.width(),
                    p_.height()) != need)
        return false;
    }
    if (sym_ == Symmetry::kNone) return true;
    if (steps_.empty()) {
      return sym_ != Symmetry::kSquare || en.width <= en.height;
    }
    if (s.base == 0 && s.x + en.width == p_.width()) {
      const Entry& bl = e_[steps_.front().entry];
      if (en.width <= bl.width) return false;
      if (sym_ == Symmetry::kSquare && en.width >= bl.height) return false;
    }
    return true;
  }

  const EngineProblem& p_;
  const std::vector<Entry>& e_;
  Skyline sky_;
  std::vector<char> used_;
  std::vector<Step> steps_;
  const std::atomic<bool>* cancel_;
  Clock::time_point start_;
  Symmetry sym_ = Symmetry::kNone;
  const std::vector<unsigned>* touch_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_ = UINT64_MAX;
  int max_depth_ = 0;
  bool limit_hit_ = false;
};

// A search prefix: the first one or two entries placed.
using Prefix = std::vector<int>;

std::vector<Prefix> EnumeratePrefixes(const EngineProblem& p) {
  std::vector<Prefix> out;
  Searcher s(p, nullptr, Clock::now());
  const auto first = s.sky().LowestSlot();
  if (!first) return {Prefix{}};
  s.ForEachMove(*first, [&](int a) {
    if (!s.Push(a, *first)) return true;
    const auto second = s.sky().LowestSlot();
    if (!second) {
      out.push_back({a});
    } else {
      s.ForEachMove(*second, [&](int b) {
        out.push_back({a, b});
        return true;
      });
    }
    s.Pop();
    return true;
  });
  return out;
}

}  // namespace

std::string_view StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFound:
      return "FOUND";
    case SolveStatus::kExhausted:
      return "EXHAUSTED";
    case SolveStatus::kLimit:
      return "LIMIT";
  }
  return "?";
}

EngineProblem EngineProblem::Pmp(const PieceSet& ps, SearchOptions options) {
  EngineProblem p;
  p.width_ = ps.spec().width;
  p.height_ = ps.spec().height;
  p.mode_ = EngineMode::kPmp;
  p.piece_area_ = ps.spec().piece_area;
  p.class_count_ = ps.class_count();
  for (const Piece& pc : ps.pieces()) {
    p.entries_.push_back({pc.width, pc.height, pc.class_id});
  }
  if (ps.spec().piece_count < kMinPerfectPieces && !options.lemma_audit) {
    throw std::invalid_argument(
        "fewer than seven pieces needs lemma_audit to be set");
  }
  p.options_ = options;
  p.Finish();
  return p;
}

EngineProblem EngineProblem::Generic(std::int64_t width, std::int64_t height,
                                     std::vector<Entry> entries,
                                     SearchOptions options) {
  if (width < 1 || height < 1 || width > kMaxBoardSide ||
      height > kMaxBoardSide) {
    throw std::invalid_argument("board sides must be in [1, 100000]");
  }
  EngineProblem p;
  p.width_ = width;
  p.height_ = height;
  p.mode_ = EngineMode::kGeneric;
  int max_class = -1;
  for (const Entry& en : entries) {
    if (en.width < 1 || en.height < 1 || en.class_id < 0) {
      throw std::invalid_argument("entries need positive sides and classes");
    }
    max_class = std::max(max_class, en.class_id);
  }
  p.class_count_ = max_class + 1;
  p.entries_ = std::move(entries);
  p.options_ = options;
  p.Finish();
  return p;
}

EngineProblem EngineProblem::WithBoundary(const PieceSet& ps,
                                          const PerimeterCandidate& cand,
                                          SearchOptions options) {
  options.symmetry = Symmetry::kNone;
  EngineProblem p = Pmp(ps, options);
  // Entries are still in PieceSet order here (Pmp keeps it), so indices match.
  std::vector<unsigned> need(ps.size(), 0);
  std::vector<char> perimeter_class(ps.class_count(), 0);
  const auto mark = [&](const SideSubset& side, unsigned bit) {
    for (int m : side.members) {
      need[m] |= bit;
      perimeter_class[ps[m].class_id] = 1;
    }
  };
  mark(cand.bottom, kTouchBottom);
  mark(cand.right, kTouchRight);
  mark(cand.top, kTouchTop);
  mark(cand.left, kTouchLeft);
  for (int i = 0; i < ps.size(); ++i) {
    if (need[i] == 0 && perimeter_class[ps[i].class_id]) need[i] = 0xFFu;
  }
  p.touch_ = std::move(need);
  return p;
}

void EngineProblem::set_options(const SearchOptions& options) {
  options_ = options;
  if (touch_) options_.symmetry = Symmetry::kNone;
  Finish();
}

void EngineProblem::Finish() {
  if (options_.workers < 1) {
    throw std::invalid_argument("workers must be at least 1");
  }
  const bool square = width_ == height_;
  switch (options_.symmetry) {
    case Symmetry::kAuto:
      symmetry_ = (mode_ == EngineMode::kPmp && square && !touch_ &&
                   entries_.size() > 1)
                      ? Symmetry::kSquare
                      : Symmetry::kNone;
      break;
    case Symmetry::kNone:
      symmetry_ = Symmetry::kNone;
      break;
    case Symmetry::kSquare:
      if (mode_ != EngineMode::kPmp || !square) {
        throw std::invalid_argument(
            "square symmetry needs a square board of equal-area pieces");
      }
      symmetry_ = Symmetry::kSquare;
      break;
    case Symmetry::kMirror:
      if (mode_ != EngineMode::kPmp) {
        throw std::invalid_argument("mirror symmetry needs equal-area pieces");
      }
      symmetry_ = Symmetry::kMirror;
      break;
  }
  // Stable sort keeps the PieceSet order, which is already by width.
  if (!touch_) {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const Entry& a, const Entry& b) {
                       return a.width != b.width ? a.width < b.width
                                                 : a.height < b.height;
                     });
  }
}

SolveResult Solve(const EngineProblem& problem) {
  const auto start = Clock::now();
  Searcher s(problem, nullptr, start);
  SolveResult r;
  const Outcome out = s.Dfs();
  r.stats.nodes = s.nodes();
  r.stats.max_depth = s.max_depth();
  r.stats.elapsed = Clock::now() - start;
  if (out == Outcome::kFound) {
    r.status = SolveStatus::kFound;
    r.tiling = s.Result();
  } else {
    r.status = out == Outcome::kAborted ? SolveStatus::kLimit
                                        : SolveStatus::kExhausted;
  }
  return r;
}

SolveResult SolveParallel(const EngineProblem& problem, int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (workers == 1) {
    SolveResult r = Solve(problem);
    r.stats.tasks = 1;
    r.stats.tasks_finished = 1;
    return r;
  }
  const auto start = Clock::now();
  const std::vector<Prefix> tasks = EnumeratePrefixes(problem);
  const bool canonical = problem.options().canonical_witness;

  struct Shared {
    std::mutex mu;
    std::size_t next = 0;
    std::size_t best = SIZE_MAX;  // lowest task index that found a tiling
    std::optional<Tiling> tiling;
    std::uint64_t nodes = 0;
    int max_depth = 0;
    int finished = 0;
    bool limit = false;
  } sh;
  // One cancellation flag per task so canonical mode can stop only the tasks
  // after the current best.
  std::vector<std::atomic<bool>> cancel(tasks.size());

  auto work = [&] {
    for (;;) {
      std::size_t t;
      {
        std::lock_guard lk(sh.mu);
        if (sh.next >= tasks.size()) return;
        t = sh.next++;
        if (t > sh.best || (!canonical && sh.tiling)) continue;
      }
      Searcher s(problem, &cancel[t], start);
      bool ok = true;
      for (int a : tasks[t]) {
        const auto slot = s.sky().LowestSlot();
        if (!slot || !s.Push(a, *slot)) {
          ok = false;
          break;
        }
      }
      Outcome out = ok ? s.Dfs() : Outcome::kExhausted;
      const bool limit_hit = s.limit_hit();
      std::lock_guard lk(sh.mu);
      sh.nodes += s.nodes();
      sh.max_depth = std::max(sh.max_depth, s.max_depth());
      if (out == Outcome::kFound && t < sh.best) {
        sh.best = t;
        sh.tiling = s.Result();
        for (std::size_t u = canonical ? t + 1 : 0; u < tasks.size(); ++u) {
          cancel[u].store(true, std::memory_order_relaxed);
        }
      }
      if (out == Outcome::kAborted && limit_hit) sh.limit = true;
      if (out != Outcome::kAborted) ++sh.finished;
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = std::min<int>(workers, std::max<std::size_t>(1, tasks.size()));
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
  }
  SolveResult r;
  r.stats.nodes = sh.nodes;
  r.stats.max_depth = sh.max_depth;
  r.stats.tasks = static_cast<int>(tasks.size());
  r.stats.tasks_finished = sh.finished;
  r.stats.elapsed = Clock::now() - start;
  if (sh.tiling) {
    r.status = SolveStatus::kFound;
    r.tiling = std::move(sh.tiling);
  } else {
    r.status = sh.limit ? SolveStatus::kLimit : SolveStatus::kExhausted;
  }
  return r;
}

SolveResult Run(const EngineProblem& problem) {
  return problem.options().workers > 1
             ? SolveParallel(problem, problem.options().workers)
             : Solve(problem);
}

SolveResult RefuteCandidate(const PieceSet& ps, const PerimeterCandidate& cand,
                            const SearchOptions& options) {
  return Run(EngineProblem::WithBoundary(ps, cand, options));
}

}  // namespace mondrian
