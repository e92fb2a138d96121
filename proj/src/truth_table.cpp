#include "debruijn/truth_table.hpp"

#include <bit>
#include <cctype>

#include "debruijn/errors.hpp"

namespace debruijn {

TruthTable::TruthTable(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw PreconditionError("truth table arity " + std::to_string(arity) + " outside 0.." +
                            std::to_string(kMaxArity));
  }
  words_.assign(static_cast<std::size_t>((size() + 63) / 64), 0);
}

TruthTable TruthTable::parse(int arity, std::string_view text) {
  TruthTable t(arity);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const std::uint64_t bits = t.size();
  if (compact.size() == bits && compact.find_first_not_of("01") == std::string::npos) {
    for (std::uint64_t i = 0; i < bits; ++i) t.set(i, compact[i] - '0');
    return t;
  }
  if (arity >= 2 && compact.size() == bits / 4) {
    for (std::uint64_t d = 0; d < compact.size(); ++d) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(compact[d])));
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        throw ParseError("invalid hex digit '" + std::string(1, compact[d]) + "' in truth table");
      }
      for (int b = 0; b < 4; ++b) t.set(d * 4 + static_cast<std::uint64_t>(b), (v >> (3 - b)) & 1);
    }
    return t;
  }
  throw ParseError("truth table of arity " + std::to_string(arity) + " needs " +
                   std::to_string(bits) + " binary digits or " + std::to_string(bits / 4) +
                   " hex digits, got " + std::to_string(compact.size()) + " characters");
}

int TruthTable::at(const BitWord& input) const {
  if (input.size() != arity_) {
    throw PreconditionError("input of length " + std::to_string(input.size()) +
                            " for a table of arity " + std::to_string(arity_));
  }
  return (*this)[input.value()];
}

std::uint64_t TruthTable::weight() const noexcept {
  std::uint64_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

std::string TruthTable::binary() const {
  std::string s(static_cast<std::size_t>(size()), '0');
  for (std::uint64_t i = 0; i < size(); ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string TruthTable::hex() const {
  if (arity_ < 2) return binary();
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(static_cast<std::size_t>(size() / 4));
  for (std::uint64_t d = 0; d < size() / 4; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | (*this)[d * 4 + static_cast<std::uint64_t>(b)];
    s.push_back(kDigits[v]);
  }
  return s;
}

}  // namespace debruijn
