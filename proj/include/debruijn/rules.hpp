#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "debruijn/bitword.hpp"
#include "debruijn/fsr.hpp"

namespace debruijn {

// Successor-rule families. Each one names a condition on the current state
// c = c_0 ... c_{n-1}; the next bit is the base register's feedback bit,
// complemented exactly when the condition holds.
//
// PCR families use v = 0,c_1..c_{n-1} (an LZ state) or u = c_1..c_{n-1},1
// (an EO state). PSR families work on (n+1)-stage windows of PSR cycles.

/// Fires iff L_lz^k v is a necklace.
struct PcrLzK {
  std::uint64_t k = 0;
};
/// Fires iff L_eo^k u is a necklace.
struct PcrEoK {
  std::uint64_t k = 0;
};
/// Fires iff the last LZ rotation of v before returning to v is a necklace
/// (v rotated to start at its largest-index zero among c_1..c_{n-1}).
struct PcrLastLz {};
/// Fires iff L_eo u is a necklace (u rotated past its first one among
/// c_1..c_{n-1}).
struct PcrFirstEo {};
/// Weight bands 1 = k_1 < ... < k_t = n+1: with k_i <= (zeros of v) < k_{i+1},
/// fires iff L_lz^{k_i - 1} v is a necklace.
struct PcrWeightBandsLz {
  std::vector<int> ks;
};
/// As PcrWeightBandsLz with wt(u) and L_eo.
struct PcrWeightBandsEo {
  std::vector<int> ks;
};
/// g[w - 1] = g(w) in 0..w-1 for w = 1..n; fires iff L_lz^{g(zeros of v)} v
/// is a necklace.
struct PcrGLz {
  std::vector<int> g;
};
/// Fires iff L_eo^{g(wt(u))} u is a necklace.
struct PcrGEo {
  std::vector<int> g;
};
/// One chosen LZ state per PCR cycle other than (1); fires iff v is chosen.
struct PcrTable {
  std::vector<BitWord> choice;
};
/// Cycle-representative rule over an arbitrary nonsingular register.
struct Jfb {
  FeedbackFunction f;
};
/// w = c_1..c_{n-1}, 1+c_1+..+c_{n-1}, 1; fires iff w starts with a maximal
/// zero run of its cycle and L_rz^k w is a necklace.
struct PsrRunK {
  std::uint64_t k = 0;
};
/// w = 1+c_1+..+c_{n-1}, c_1..c_{n-1}, 1; fires iff L_eo^k w != w and is a
/// necklace, or L_eo^k w == w and L_eo w is a necklace. k >= 1.
struct PsrEoK {
  std::uint64_t k = 1;
};
/// Fires iff w rotated just past its last one among d_0..d_{n-1} is a necklace.
struct PsrIndexS {};
/// Fires iff w rotated just past its first one among d_0..d_{n-1} is a necklace.
struct PsrIndexT {};
/// One chosen EO (n+1)-state per nonzero PSR cycle (the unique EO state or a
/// non-necklace one); fires iff w is chosen.
struct PsrEoTable {
  std::vector<BitWord> choice;
};
/// Double-zero / no-double-zero split on the cycle of 0,c_1..c_{n-1},sum.
struct PsrMixedK {
  std::uint64_t k = 0;
};

using Family = std::variant<PcrLzK, PcrEoK, PcrLastLz, PcrFirstEo, PcrWeightBandsLz,
                            PcrWeightBandsEo, PcrGLz, PcrGEo, PcrTable, Jfb, PsrRunK, PsrEoK,
                            PsrIndexS, PsrIndexT, PsrEoTable, PsrMixedK>;

/// Largest order a rule accepts: PSR windows need n+1 bits.
inline constexpr int kMaxRuleOrder = 63;

/// Every invariant violation of (n, family); empty when valid.
std::vector<std::string> validate(int n, const Family& family);

/// Kebab-case family name used by the JSON schema and the CLI.
std::string family_name(const Family& family);

/// A validated successor rule of order n.
class RuleSpec {
 public:
  /// Throws SpecError listing every violation.
  RuleSpec(int n, Family family);

  int order() const noexcept { return n_; }
  const Family& family() const noexcept { return family_; }
  std::string name() const { return family_name(family_); }

  /// The register whose cycles the rule joins (PCR, PSR, or the Jfb function).
  const FeedbackFunction& base() const noexcept { return base_; }

  /// True iff the rule complements the base feedback bit on this state.
  bool fires(const BitWord& state) const;
  /// Next bit for the state. Throws on a length mismatch.
  int next_bit(const BitWord& state) const;
  /// Unchecked variant on a packed n-bit state.
  int next_bit_packed(std::uint64_t state) const;

 private:
  bool fires_unchecked(const BitWord& state) const;

  int n_;
  Family family_;
  FeedbackFunction base_;
  std::shared_ptr<const std::unordered_set<std::uint64_t>> chosen_;
};

/// Condition words the families test; exposed for tests and tooling.
/// v = 0,c_1..c_{n-1}.
BitWord leading_zero_word(const BitWord& c);
/// u = c_1..c_{n-1},1.
BitWord ending_one_word(const BitWord& c);
/// c_1..c_{n-1}, 1+c_1+..+c_{n-1}, 1.
BitWord psr_run_word(const BitWord& c);
/// 1+c_1+..+c_{n-1}, c_1..c_{n-1}, 1.
BitWord psr_eo_word(const BitWord& c);

enum class TableKind { kPcr, kPsrEo };

/// States a table rule may choose in one cycle, given by its necklace:
/// distinct LZ rotations (PCR) or the admissible EO rotations (PSR). Empty
/// for the root cycle that takes no choice.
std::vector<BitWord> admissible_choices(TableKind kind, const BitWord& necklace);

/// Product over cycles of the admissible choice counts, saturating at
/// UINT64_MAX.
std::uint64_t table_choice_count(TableKind kind, int n);

/// Calls `visit` with every valid table rule of order n exactly once.
/// Throws BudgetError carrying the product when it exceeds `budget`.
void enumerate_table_choices(TableKind kind, int n, std::uint64_t budget,
                             const std::function<void(const RuleSpec&)>& visit);

}  // namespace debruijn
