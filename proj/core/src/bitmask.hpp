#ifndef MONDRIAN_SRC_BITMASK_HPP_
#define MONDRIAN_SRC_BITMASK_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>

#include <boost/dynamic_bitset.hpp>

namespace mondrian::internal {

// Single-word set with the subset of the boost::dynamic_bitset interface used
// by the filters. Used whenever every index fits in 64 bits.
class Mask64 {
 public:
  explicit Mask64(std::size_t /*size*/ = 64) {}

  void set(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  bool test(std::size_t i) const { return (bits_ >> i) & 1U; }
  std::size_t count() const { return std::popcount(bits_); }
  bool any() const { return bits_ != 0; }
  bool none() const { return bits_ == 0; }
  bool is_subset_of(const Mask64& o) const { return (bits_ & ~o.bits_) == 0; }

  Mask64& operator|=(const Mask64& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend Mask64 operator&(Mask64 a, const Mask64& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend Mask64 operator|(Mask64 a, const Mask64& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend bool operator==(const Mask64&, const Mask64&) = default;

 private:
  std::uint64_t bits_ = 0;
};

using WideMask = boost::dynamic_bitset<std::uint64_t>;

}  // namespace mondrian::internal

#endif  // MONDRIAN_SRC_BITMASK_HPP_
