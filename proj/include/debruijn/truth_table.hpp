#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/bitword.hpp"

namespace debruijn {

/// Boolean function of `arity` variables stored as 2^arity bits.
///
/// Entry i is the value on the input word whose packed value is i, i.e. the
/// input x_0 ... x_{m-1} read as an integer with x_0 most significant.
class TruthTable {
 public:
  static constexpr int kMaxArity = 30;

  TruthTable() = default;
  /// All-zero table.
  explicit TruthTable(int arity);

  /// Loads 2^arity bits from ASCII text: either 2^arity '0'/'1' characters
  /// or 2^arity / 4 hex digits (arity >= 2), the first digit holding entries
  /// 0..3 with entry 0 in its most significant bit. Whitespace is ignored.
  static TruthTable parse(int arity, std::string_view text);

  int arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }

  int operator[](std::uint64_t index) const noexcept {
    return static_cast<int>((words_[index / 64] >> (index % 64)) & 1U);
  }
  int at(const BitWord& input) const;

  void set(std::uint64_t index, int bit) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (index % 64);
    if (bit) {
      words_[index / 64] |= m;
    } else {
      words_[index / 64] &= ~m;
    }
  }
  void flip(std::uint64_t index) noexcept { words_[index / 64] ^= std::uint64_t{1} << (index % 64); }

  /// Number of inputs mapped to 1.
  std::uint64_t weight() const noexcept;

  std::string binary() const;
  /// Hex form accepted by parse(). Arity < 2 falls back to binary().
  std::string hex() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<std::uint64_t> words_;
  int arity_ = 0;
};

}  // namespace debruijn
