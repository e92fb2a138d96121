#include "debruijn/bitword.hpp"

#include <array>
#include <bit>
#include <ostream>

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

constexpr std::uint64_t low_mask(int length) noexcept {
  return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

constexpr std::uint64_t rotl(std::uint64_t v, int length, int k) noexcept {
  if (k == 0) return v;
  return ((v << k) | (v >> (length - k))) & low_mask(length);
}

int reduce(std::int64_t k, int length) noexcept {
  const auto r = static_cast<int>(k % length);
  return r < 0 ? r + length : r;
}

void check_length(int length) {
  if (length < 1 || length > BitWord::kMaxLength) {
    throw PreconditionError("bit word length " + std::to_string(length) + " outside 1.." +
                            std::to_string(BitWord::kMaxLength));
  }
}

}  // namespace

BitWord::BitWord(int length, std::uint64_t value) : bits_(value), length_(length) {
  check_length(length);
  if ((value & ~low_mask(length)) != 0) {
    throw PreconditionError("value does not fit in " + std::to_string(length) + " bits");
  }
}

BitWord BitWord::zeros(int length) { return BitWord(length, 0); }

BitWord BitWord::ones(int length) {
  check_length(length);
  return BitWord(length, low_mask(length));
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw ParseError("bit word must have 1.." + std::to_string(kMaxLength) + " characters, got " +
                     std::to_string(text.size()));
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) + "' in bit word");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitWord(static_cast<int>(text.size()), v);
}

BitWord BitWord::with_bit(int i, int bit) const {
  if (i < 0 || i >= length_) throw PreconditionError("bit index out of range");
  const std::uint64_t m = std::uint64_t{1} << (length_ - 1 - i);
  return BitWord(length_, bit ? (bits_ | m) : (bits_ & ~m));
}

BitWord BitWord::flipped(int i) const {
  if (i < 0 || i >= length_) throw PreconditionError("bit index out of range");
  return BitWord(length_, bits_ ^ (std::uint64_t{1} << (length_ - 1 - i)));
}

BitWord BitWord::drop_front() const {
  if (length_ == 1) throw PreconditionError("cannot drop the only bit of a word");
  return BitWord(length_ - 1, bits_ & low_mask(length_ - 1));
}

BitWord BitWord::push_back(int bit) const {
  return BitWord(length_ + 1, (bits_ << 1) | static_cast<std::uint64_t>(bit & 1));
}

BitWord BitWord::push_front(int bit) const {
  return BitWord(length_ + 1, bits_ | (static_cast<std::uint64_t>(bit & 1) << length_));
}

std::string BitWord::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + (*this)[i]);
  return s;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept {
  const int common = a.length_ < b.length_ ? a.length_ : b.length_;
  const std::uint64_t pa = a.bits_ >> (a.length_ - common);
  const std::uint64_t pb = b.bits_ >> (b.length_ - common);
  if (pa != pb) return pa <=> pb;
  return a.length_ <=> b.length_;
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.str(); }

int weight(const BitWord& w) noexcept { return std::popcount(w.value()); }

BitWord conjugate(const BitWord& w) { return w.flipped(0); }

BitWord companion(const BitWord& w) { return w.flipped(w.size() - 1); }

BitWord complement(const BitWord& w) { return BitWord(w.size(), ~w.value() & low_mask(w.size())); }

BitWord rotate_left(const BitWord& w, std::int64_t k) {
  return BitWord(w.size(), rotl(w.value(), w.size(), reduce(k, w.size())));
}

BitWord rotate_right(const BitWord& w, std::int64_t k) {
  return rotate_left(w, -reduce(k, w.size()));
}

int least_period(const BitWord& w) noexcept {
  const int m = w.size();
  for (int p = 1; p < m; ++p) {
    if (m % p == 0 && rotl(w.value(), m, p) == w.value()) return p;
  }
  return m;
}

bool is_necklace(const BitWord& w) noexcept {
  // Prenecklace scan: p is the period of the longest Lyndon prefix so far.
  const int m = w.size();
  int p = 1;
  for (int i = 1; i < m; ++i) {
    const int a = w[i];
    const int b = w[i - p];
    if (a < b) return false;
    if (a > b) p = i + 1;
  }
  return m % p == 0;
}

BitWord least_rotation(const BitWord& w) {
  const int m = w.size();
  std::array<int, 2 * BitWord::kMaxLength> failure;
  failure.fill(-1);
  int k = 0;
  for (int j = 1; j < 2 * m; ++j) {
    const int sj = w[j % m];
    int i = failure[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != w[(k + i + 1) % m]) {
      if (sj < w[(k + i + 1) % m]) k = j - i - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (sj != w[(k + i + 1) % m]) {
      // i == -1 here
      if (sj < w[k % m]) k = j;
      failure[static_cast<std::size_t>(j - k)] = -1;
    } else {
      failure[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return rotate_left(w, k % m);
}

std::string RunLength::str() const { return is_infinite() ? "inf" : std::to_string(length_); }

RunLength max_zero_run(const BitWord& w) noexcept {
  if (w.value() == 0) return RunLength::infinite();
  const int m = w.size();
  int best = 0;
  int run = 0;
  for (int i = 0; i < 2 * m; ++i) {
    if (w[i % m] == 0) {
      ++run;
      if (run > best) best = run;
    } else {
      run = 0;
    }
  }
  return RunLength(best);
}

namespace {

// Shape predicate with any per-orbit quantity (the maximal zero run) fixed up
// front, so walking an orbit costs O(m) in total.
struct ShapeTest {
  Shift op;
  int zero_prefix = 0;  // for kMaxZeroRun: required number of leading zeros

  ShapeTest(Shift o, const BitWord& w) : op(o) {
    if (op == Shift::kMaxZeroRun) {
      const RunLength r = max_zero_run(w);
      zero_prefix = r.is_infinite() ? w.size() : r.length();
    }
  }

  bool operator()(std::uint64_t v, int m) const noexcept {
    switch (op) {
      case Shift::kLeadingZero:
        return ((v >> (m - 1)) & 1U) == 0;
      case Shift::kEndingOne:
        return (v & 1U) == 1;
      case Shift::kMaxZeroRun:
        return zero_prefix == 0 || (v >> (m - zero_prefix)) == 0;
      case Shift::kDoubleZero:
        return m >= 2 && (v >> (m - 2)) == 0;
    }
    return false;
  }
};

const char* shift_name(Shift op) {
  switch (op) {
    case Shift::kLeadingZero:
      return "leading-zero";
    case Shift::kEndingOne:
      return "ending-one";
    case Shift::kMaxZeroRun:
      return "maximal-zero-run";
    case Shift::kDoubleZero:
      return "double-zero";
  }
  return "?";
}

std::uint64_t next_shaped(const ShapeTest& test, std::uint64_t v, int m) noexcept {
  for (int i = 1; i <= m; ++i) {
    const std::uint64_t r = rotl(v, m, i);
    if (test(r, m)) return r;
  }
  return v;  // unreachable: v itself qualifies at i == m
}

ShapeTest checked_test(Shift op, const BitWord& w) {
  ShapeTest test(op, w);
  if (!test(w.value(), w.size())) {
    throw PreconditionError(std::string("word ") + w.str() + " does not have the " +
                            shift_name(op) + " shape");
  }
  return test;
}

}  // namespace

bool has_shape(Shift op, const BitWord& w) noexcept {
  return ShapeTest(op, w)(w.value(), w.size());
}

BitWord shift(Shift op, const BitWord& w) {
  const ShapeTest test = checked_test(op, w);
  return BitWord(w.size(), next_shaped(test, w.value(), w.size()));
}

int shift_orbit_length(Shift op, const BitWord& w) {
  const ShapeTest test = checked_test(op, w);
  int len = 1;
  for (std::uint64_t x = next_shaped(test, w.value(), w.size()); x != w.value();
       x = next_shaped(test, x, w.size())) {
    ++len;
  }
  return len;
}

BitWord shift_power(Shift op, const BitWord& w, std::uint64_t k) {
  const ShapeTest test = checked_test(op, w);
  const int m = w.size();
  std::uint64_t x = w.value();
  if (k == 0) return w;
  // Walk until k steps are done or the orbit closes, whichever comes first.
  std::uint64_t steps = 0;
  do {
    x = next_shaped(test, x, m);
    ++steps;
  } while (steps < k && x != w.value());
  if (steps == k) return BitWord(m, x);
  for (std::uint64_t rest = k % steps; rest > 0; --rest) x = next_shaped(test, x, m);
  return BitWord(m, x);
}

}  // namespace debruijn
