#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/bitword.hpp"

namespace debruijn {

/// Growable bit sequence used for whole de Bruijn sequences (2^n bits).
/// Bit 0 is the first bit emitted.
class BitString {
 public:
  BitString() = default;

  static BitString parse(std::string_view text);

  void reserve(std::size_t bits) { blocks_.reserve((bits + 63) / 64); }

  void push_back(int bit) {
    if (size_ % 64 == 0) blocks_.push_back(0);
    if (bit) blocks_.back() |= std::uint64_t{1} << (size_ % 64);
    ++size_;
  }

  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((blocks_[i / 64] >> (i % 64)) & 1U);
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// n consecutive bits starting at `pos`, read cyclically.
  BitWord window(std::size_t pos, int n) const;

  std::string str() const;
  /// 8 bits per byte, first bit in the most significant position of the
  /// first byte, zero-padded at the end; two lowercase hex digits per byte.
  std::string hex() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

}  // namespace debruijn
