#include "debruijn/bitstring.hpp"

#include "debruijn/errors.hpp"

namespace debruijn {

BitString BitString::parse(std::string_view text) {
  BitString s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      s.push_back(c - '0');
    } else {
      throw ParseError("invalid character '" + std::string(1, c) + "' in bit string");
    }
  }
  return s;
}

BitWord BitString::window(std::size_t pos, int n) const {
  if (empty()) throw PreconditionError("window of an empty bit string");
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) v = (v << 1) | static_cast<std::uint64_t>((*this)[(pos + static_cast<std::size_t>(i)) % size_]);
  return BitWord(n, v);
}

std::string BitString::str() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

std::string BitString::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((size_ + 7) / 8 * 2);
  for (std::size_t byte = 0; byte * 8 < size_; ++byte) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t i = byte * 8 + b;
      v = (v << 1) | static_cast<unsigned>(i < size_ ? (*this)[i] : 0);
    }
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0xF]);
  }
  return out;
}

}  // namespace debruijn
