#include "debruijn/generator.hpp"

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

std::uint64_t state_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_materializable(int n) {
  if (n > kMaxMaterializedOrder) {
    throw BudgetError("a full sequence of order " + std::to_string(n) + " has 2^" +
                          std::to_string(n) + " bits; use streaming mode",
                      n >= 64 ? UINT64_MAX : std::uint64_t{1} << n,
                      std::uint64_t{1} << kMaxMaterializedOrder);
  }
}

template <class NextBit>
GeneratedSequence run(int n, const BitWord& start, NextBit next_bit) {
  if (start.size() != n) {
    throw PreconditionError("start state has " + std::to_string(start.size()) + " bits, order is " +
                            std::to_string(n));
  }
  check_materializable(n);
  const std::uint64_t period = std::uint64_t{1} << n;
  const std::uint64_t mask = state_mask(n);
  GeneratedSequence seq;
  seq.n = n;
  seq.start = start;
  seq.bits.reserve(period);
  for (int i = 0; i < n && static_cast<std::uint64_t>(i) < period; ++i) seq.bits.push_back(start[i]);
  std::uint64_t s = start.value();
  for (std::uint64_t step = 1; step <= period; ++step) {
    const int bit = next_bit(s);
    s = ((s << 1) & mask) | static_cast<std::uint64_t>(bit);
    if (s == start.value() && step < period) throw ClosureError(step, step);
    if (step + static_cast<std::uint64_t>(n) <= period) seq.bits.push_back(bit);
  }
  if (s != start.value()) throw ClosureError(period, 0);
  return seq;
}

}  // namespace

GeneratedSequence generate(const RuleSpec& spec, const BitWord& start) {
  return run(spec.order(), start, [&](std::uint64_t s) { return spec.next_bit_packed(s); });
}

GeneratedSequence generate(const RuleSpec& spec) {
  return generate(spec, BitWord::zeros(spec.order()));
}

GeneratedSequence generate(const FeedbackFunction& f, const BitWord& start) {
  return run(f.order(), start, [&](std::uint64_t s) { return f.evaluate_packed(s); });
}

SequenceStream::SequenceStream(const RuleSpec& spec, const BitWord& start)
    : spec_(&spec), state_(start.value()), mask_(state_mask(spec.order())), pending_(spec.order()) {
  if (start.size() != spec.order()) {
    throw PreconditionError("start state length does not match the rule order");
  }
}

SequenceStream::SequenceStream(const RuleSpec& spec)
    : SequenceStream(spec, BitWord::zeros(spec.order())) {}

bool verify_de_bruijn(const BitString& bits, int n) {
  if (n < 1 || n > kMaxMaterializedOrder) return false;
  const std::uint64_t period = std::uint64_t{1} << n;
  if (bits.size() != period) return false;
  const std::uint64_t mask = state_mask(n);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>((period + 63) / 64), 0);
  std::uint64_t w = bits.window(0, n).value();
  for (std::uint64_t i = 0; i < period; ++i) {
    if ((seen[w / 64] >> (w % 64)) & 1U) return false;
    seen[w / 64] |= std::uint64_t{1} << (w % 64);
    w = ((w << 1) & mask) | static_cast<std::uint64_t>(bits[(i + static_cast<std::uint64_t>(n)) % period]);
  }
  return true;
}

bool verify_de_bruijn(const GeneratedSequence& seq) { return verify_de_bruijn(seq.bits, seq.n); }

std::string canonical_form(const GeneratedSequence& seq) {
  const std::string text = seq.bits.str();
  const std::size_t len = text.size();
  if (len == 0) return text;
  const std::string doubled = text + text.substr(0, static_cast<std::size_t>(seq.n) < len ? seq.n : len);
  const std::size_t pos = doubled.find(std::string(static_cast<std::size_t>(seq.n), '0'));
  if (pos == std::string::npos || pos == 0 || pos >= len) return text;
  return text.substr(pos) + text.substr(0, pos);
}

std::string canonical_form(const RuleSpec& spec) { return generate(spec).bits.str(); }

std::vector<BitWord> fired_states(const RuleSpec& spec, int max_order) {
  const int n = spec.order();
  check_sweep_budget(n, max_order);
  std::vector<BitWord> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (spec.next_bit_packed(s) != spec.base().evaluate_packed(s)) out.emplace_back(n, s);
  }
  return out;
}

std::vector<FiredPair> fired_pairs(const RuleSpec& spec, int max_order) {
  const auto states = fired_states(spec, max_order);
  // Sorted order puts every 0-prefixed state before every 1-prefixed one.
  const std::size_t half = states.size() / 2;
  if (states.size() % 2 != 0) throw PreconditionError("fired set is not closed under conjugation");
  std::vector<FiredPair> out;
  out.reserve(half);
  for (std::size_t i = 0; i < half; ++i) {
    const BitWord& low = states[i];
    const BitWord& high = states[half + i];
    if (low.front() != 0 || high != conjugate(low)) {
      throw PreconditionError("fired set is not closed under conjugation at " + low.str());
    }
    out.push_back({low, high});
  }
  return out;
}

}  // namespace debruijn
