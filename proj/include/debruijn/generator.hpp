#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/bitstring.hpp"
#include "debruijn/bitword.hpp"
#include "debruijn/fsr.hpp"
#include "debruijn/rules.hpp"

namespace debruijn {

/// Largest order `generate` materializes (2^n bits in memory).
inline constexpr int kMaxMaterializedOrder = 34;

struct GeneratedSequence {
  int n = 0;
  BitString bits;  ///< 2^n bits; the first n equal `start`
  BitWord start;
};

/// Runs the rule from `start` for one full period and checks that the state
/// returns to `start` exactly after 2^n steps. Throws ClosureError otherwise.
GeneratedSequence generate(const RuleSpec& spec, const BitWord& start);
/// From 0^n.
GeneratedSequence generate(const RuleSpec& spec);

/// Same for a plain feedback function, which must be de Bruijn.
GeneratedSequence generate(const FeedbackFunction& f, const BitWord& start);

/// Bit-at-a-time generator: yields the start bits, then successor bits, with
/// O(n) state and no allocation. Keeps a reference to the spec.
class SequenceStream {
 public:
  SequenceStream(const RuleSpec& spec, const BitWord& start);
  explicit SequenceStream(const RuleSpec& spec);

  int next() noexcept {
    if (pending_ > 0) {
      --pending_;
      return static_cast<int>((state_ >> pending_) & 1U);
    }
    const int bit = spec_->next_bit_packed(state_);
    state_ = ((state_ << 1) & mask_) | static_cast<std::uint64_t>(bit);
    return bit;
  }
  /// The n-stage state after the bits emitted so far (the start state until
  /// its n bits have been yielded).
  BitWord state() const { return BitWord(spec_->order(), state_); }

 private:
  const RuleSpec* spec_;
  std::uint64_t state_;
  std::uint64_t mask_;
  int pending_;
};

/// True iff `bits` has length 2^n and its 2^n cyclic n-windows are distinct.
bool verify_de_bruijn(const BitString& bits, int n);
bool verify_de_bruijn(const GeneratedSequence& seq);

/// The sequence rotated to begin at its 0^n window, as '0'/'1' text. Equal to
/// the output of a generation from 0^n.
std::string canonical_form(const GeneratedSequence& seq);
std::string canonical_form(const RuleSpec& spec);

/// A conjugate pair whose successors the rule interchanges.
struct FiredPair {
  BitWord low;   ///< 0, x_1..x_{n-1}
  BitWord high;  ///< 1, x_1..x_{n-1}
  friend bool operator==(const FiredPair&, const FiredPair&) = default;
};

/// Every state where the rule's bit differs from the base feedback, sorted.
std::vector<BitWord> fired_states(const RuleSpec& spec, int max_order = kDefaultSweepOrder);

/// Fired states grouped into conjugate pairs, sorted by suffix. Throws
/// PreconditionError if the fired set is not closed under conjugation.
std::vector<FiredPair> fired_pairs(const RuleSpec& spec, int max_order = kDefaultSweepOrder);

}  // namespace debruijn
