#ifndef MONDRIAN_SKYLINE_HPP_
#define MONDRIAN_SKYLINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mondrian {

// Per-column covered height of a partial tiling that is filled bottom-up.
class Skyline {
 public:
  Skyline(std::int64_t width, std::int64_t height);

  struct Slot {
    std::int64_t x = 0;           // leftmost column of minimal height
    std::int64_t flat_width = 0;  // run of equal height starting at x
    std::int64_t base = 0;        // that height

    friend bool operator==(const Slot&, const Slot&) = default;
  };

  // The next position to fill, or nullopt when every column is full.
  std::optional<Slot> LowestSlot() const;

  // True if a w x h rectangle can sit with its bottom-left corner on top of
  // column x: the span is flat and the rectangle stays below the ceiling.
  bool CanPlace(std::int64_t x, std::int64_t w, std::int64_t h) const;

  // Raises columns [x, x + w) by h. Returns false (and changes nothing) when
  // CanPlace fails.
  bool Place(std::int64_t x, std::int64_t w, std::int64_t h);

  // Exact inverse of a successful Place.
  void Unplace(std::int64_t x, std::int64_t w, std::int64_t h);

  std::int64_t width() const { return static_cast<std::int64_t>(v_.size()); }
  std::int64_t height() const { return height_; }
  std::span<const std::int64_t> columns() const { return v_; }
  std::int64_t CoveredArea() const;

 private:
  std::vector<std::int64_t> v_;
  std::int64_t height_;
};

}  // namespace mondrian

#endif  // MONDRIAN_SKYLINE_HPP_
