#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace debruijn {

/// Fixed-length binary word b_0 b_1 ... b_{m-1}, 1 <= m <= 64.
///
/// b_0 is the oldest (leftmost) bit. The word is packed into an integer with
/// b_0 as the most significant of the m low bits, so for equal lengths the
/// integer order is the lexicographic order, and value() is the index used
/// by every truth table in the library.
class BitWord {
 public:
  static constexpr int kMaxLength = 64;

  /// The single bit 0.
  constexpr BitWord() noexcept = default;

  /// Word of `length` bits whose packed value is `value`. Throws
  /// PreconditionError if the length is out of range or `value` has bits
  /// above the length.
  BitWord(int length, std::uint64_t value);

  static BitWord zeros(int length);
  static BitWord ones(int length);

  /// Parses an ASCII string of '0'/'1', b_0 first.
  static BitWord parse(std::string_view text);

  constexpr int size() const noexcept { return length_; }
  constexpr std::uint64_t value() const noexcept { return bits_; }

  /// Bit b_i.
  constexpr int operator[](int i) const noexcept {
    return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1U);
  }

  constexpr int front() const noexcept { return (*this)[0]; }
  constexpr int back() const noexcept { return static_cast<int>(bits_ & 1U); }

  BitWord with_bit(int i, int bit) const;
  BitWord flipped(int i) const;

  /// b_1 ... b_{m-1}.
  BitWord drop_front() const;
  /// b_0 ... b_{m-1}, bit.
  BitWord push_back(int bit) const;
  /// bit, b_0 ... b_{m-1}.
  BitWord push_front(int bit) const;

  std::string str() const;

  friend constexpr bool operator==(const BitWord&, const BitWord&) noexcept = default;

  /// Lexicographic order; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept;

 private:
  constexpr std::uint64_t mask() const noexcept {
    return length_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length_) - 1;
  }

  std::uint64_t bits_ = 0;
  int length_ = 1;
};

std::ostream& operator<<(std::ostream& os, const BitWord& w);

/// Number of ones.
int weight(const BitWord& w) noexcept;

/// Flips b_0.
BitWord conjugate(const BitWord& w);
/// Flips b_{m-1}.
BitWord companion(const BitWord& w);
/// Flips every bit.
BitWord complement(const BitWord& w);

/// Cyclic left rotation by k (k reduced modulo the length).
BitWord rotate_left(const BitWord& w, std::int64_t k);
BitWord rotate_right(const BitWord& w, std::int64_t k);

/// Smallest p dividing the length with rotate_left(w, p) == w.
int least_period(const BitWord& w) noexcept;

/// True iff w is lexicographically <= each of its rotations. O(m).
bool is_necklace(const BitWord& w) noexcept;

/// Lexicographically least rotation (Booth's algorithm), O(m).
BitWord least_rotation(const BitWord& w);

/// Maximal cyclic run of zeros, with a dedicated infinite value for the
/// all-zero word so that comparisons stay total.
class RunLength {
 public:
  constexpr explicit RunLength(int length) noexcept : length_(length) {}
  static constexpr RunLength infinite() noexcept { return RunLength(kInfinite); }

  constexpr bool is_infinite() const noexcept { return length_ == kInfinite; }
  /// Finite length. Meaningless when is_infinite().
  constexpr int length() const noexcept { return length_; }

  friend constexpr auto operator<=>(const RunLength&, const RunLength&) noexcept = default;

  std::string str() const;

 private:
  static constexpr int kInfinite = 1 << 30;
  int length_;
};

RunLength max_zero_run(const BitWord& w) noexcept;

/// The rotation operators that jump to the next rotation of a given shape.
enum class Shift {
  kLeadingZero,   ///< L_lz: next rotation starting with 0
  kEndingOne,     ///< L_eo: next rotation ending with 1
  kMaxZeroRun,    ///< L_rz: next rotation starting with a maximal zero run
  kDoubleZero,    ///< L_dz: next rotation starting with 0,0
};

/// True iff w has the shape the operator requires of its input and output.
bool has_shape(Shift op, const BitWord& w) noexcept;

/// One application of the operator. Throws PreconditionError if w does not
/// have the operator's shape.
BitWord shift(Shift op, const BitWord& w);

/// k-fold application, with k reduced modulo the orbit length.
BitWord shift_power(Shift op, const BitWord& w, std::uint64_t k);

/// Number of distinct words in the orbit of w under the operator.
int shift_orbit_length(Shift op, const BitWord& w);

inline BitWord shift_lz(const BitWord& v) { return shift(Shift::kLeadingZero, v); }
inline BitWord shift_eo(const BitWord& u) { return shift(Shift::kEndingOne, u); }
inline BitWord shift_rz(const BitWord& v) { return shift(Shift::kMaxZeroRun, v); }
inline BitWord shift_dz(const BitWord& v) { return shift(Shift::kDoubleZero, v); }

}  // namespace debruijn

template <>
struct std::hash<debruijn::BitWord> {
  std::size_t operator()(const debruijn::BitWord& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.value() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(w.size()));
  }
};
