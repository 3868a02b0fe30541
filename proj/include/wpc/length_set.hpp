#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace wpc {

/// Set of cycle or path lengths in [0, 63]; bit l stands for length l.
class LengthSet {
 public:
  constexpr LengthSet() = default;
  static constexpr LengthSet from_bits(std::uint64_t bits) { return LengthSet(bits); }
  /// All lengths in [lo, hi]; empty when lo > hi.
  static constexpr LengthSet range(int lo, int hi) {
    if (lo > hi) return {};
    const std::uint64_t upto_hi = hi >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (hi + 1)) - 1);
    return LengthSet(upto_hi & ~((std::uint64_t{1} << lo) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int len) const { return len >= 0 && len < 64 && ((bits_ >> len) & 1u); }
  constexpr void insert(int len) { bits_ |= std::uint64_t{1} << len; }

  constexpr std::optional<int> min() const {
    if (empty()) return std::nullopt;
    return std::countr_zero(bits_);
  }
  constexpr std::optional<int> max() const {
    if (empty()) return std::nullopt;
    return 63 - std::countl_zero(bits_);
  }
  constexpr bool includes(LengthSet other) const { return (other.bits_ & ~bits_) == 0; }
  /// True iff every length in [lo, hi] is present (vacuously true when lo > hi).
  constexpr bool covers(int lo, int hi) const { return includes(range(lo, hi)); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr LengthSet& operator|=(LengthSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr LengthSet operator|(LengthSet a, LengthSet b) { return a |= b; }
  friend constexpr LengthSet operator&(LengthSet a, LengthSet b) { return LengthSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(LengthSet, LengthSet) = default;

 private:
  constexpr explicit LengthSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace wpc
