#include "mondrian/skyline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mondrian {

Skyline::Skyline(std::int64_t width, std::int64_t height)
    : v_(width > 0 ? width : 0, 0), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("skyline needs a positive board");
  }
}

std::optional<Skyline::Slot> Skyline::LowestSlot() const {
  const auto it = std::min_element(v_.begin(), v_.end());
  if (*it >= height_) return std::nullopt;
  const std::int64_t x = it - v_.begin();
  std::int64_t end = x + 1;
  while (end < width() && v_[end] == *it) ++end;
  return Slot{x, end - x, *it};
}

bool Skyline::CanPlace(std::int64_t x, std::int64_t w, std::int64_t h) const {
  if (x < 0 || w < 1 || h < 1 || x + w > width()) return false;
  const std::int64_t base = v_[x];
  if (base + h > height_) return false;
  for (std::int64_t j = x + 1; j < x + w; ++j) {
    if (v_[j] != base) return false;
  }
  return true;
}

bool Skyline::Place(std::int64_t x, std::int64_t w, std::int64_t h) {
  if (!CanPlace(x, w, h)) return false;
  for (std::int64_t j = x; j < x + w; ++j) v_[j] += h;
  return true;
}

void Skyline::Unplace(std::int64_t x, std::int64_t w, std::int64_t h) {
  for (std::int64_t j = x; j < x + w; ++j) v_[j] -= h;
}

std::int64_t Skyline::CoveredArea() const {
  return std::accumulate(v_.begin(), v_.end(), std::int64_t{0});
}

}  // namespace mondrian
