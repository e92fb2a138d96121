#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "debruijn/bitword.hpp"
#include "debruijn/truth_table.hpp"

namespace debruijn {

enum class RegisterKind {
  kPcr,    ///< pure cycling register, f = x_0
  kPsr,    ///< pure summing register, f = x_0 + ... + x_{n-1}
  kCsr,    ///< complemented summing register, f = 1 + x_0 + ... + x_{n-1}
  kTable,  ///< explicit truth table
};

/// Nonsingular feedback function of an n-stage shift register.
class FeedbackFunction {
 public:
  /// Largest order accepted for the closed-form registers. States must fit a
  /// BitWord together with the parity bit of the (n+1)-window.
  static constexpr int kMaxOrder = 63;

  static FeedbackFunction pcr(int n);
  static FeedbackFunction psr(int n);
  static FeedbackFunction csr(int n);
  /// Explicit table of arity n. Throws PreconditionError unless the table is
  /// nonsingular, i.e. f(0, x) != f(1, x) for every suffix x.
  static FeedbackFunction table(TruthTable t);

  int order() const noexcept { return n_; }
  RegisterKind kind() const noexcept { return kind_; }
  /// "pcr", "psr", "csr" or "table".
  std::string name() const;
  /// The explicit table; only valid for RegisterKind::kTable.
  const TruthTable& truth_table() const;

  /// f(s_0, ..., s_{n-1}). Throws on a length mismatch.
  int evaluate(const BitWord& state) const;
  /// Unchecked evaluation on a packed n-bit state.
  int evaluate_packed(std::uint64_t state) const noexcept {
    switch (kind_) {
      case RegisterKind::kPcr:
        return static_cast<int>((state >> (n_ - 1)) & 1U);
      case RegisterKind::kPsr:
        return std::popcount(state) & 1;
      case RegisterKind::kCsr:
        return (std::popcount(state) & 1) ^ 1;
      case RegisterKind::kTable:
        return (*table_)[state];
    }
    return 0;
  }

  /// s_1, ..., s_{n-1}, f(s).
  BitWord step(const BitWord& state) const;

  /// Materializes the function as a table of arity n.
  TruthTable tabulate() const;

 private:
  FeedbackFunction(int n, RegisterKind kind) : n_(n), kind_(kind) {}

  int n_;
  RegisterKind kind_;
  std::shared_ptr<const TruthTable> table_;
};

/// One cycle of an FSR's state diagram.
///
/// `necklace` identifies the cycle: the least rotation of its n-window (PCR)
/// or (n+1)-window (PSR, CSR). For explicit tables, whose cycles can be
/// longer than any fixed window, it is the least n-stage state instead.
struct CycleRecord {
  BitWord necklace;
  int least_period = 0;
  /// Ones over the ambient window (n for PCR, n+1 for PSR/CSR, one period
  /// of the cycle for tables).
  int weight = 0;
  std::uint64_t state_count = 0;
  /// Lexicographically least n-stage state on the cycle.
  BitWord representative;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

/// Default cap on the order for exhaustive state-space sweeps.
inline constexpr int kDefaultSweepOrder = 26;

/// Throws BudgetError if a 2^n sweep is over `max_order`.
void check_sweep_budget(int n, int max_order);

/// Calls `visit(record, first_state)` once per cycle, in order of the least
/// packed state of each cycle.
void for_each_cycle(const FeedbackFunction& f,
                    const std::function<void(const CycleRecord&, std::uint64_t)>& visit,
                    int max_order = kDefaultSweepOrder);

/// The cycle structure Omega(f), sorted by necklace.
std::vector<CycleRecord> decompose(const FeedbackFunction& f, int max_order = kDefaultSweepOrder);

/// Canonical record of the cycle through `state`. O(period) steps.
CycleRecord cycle_of(const FeedbackFunction& f, const BitWord& state);

/// Cycle structure plus a state -> cycle lookup. Memory is 4 bytes per state.
class CycleIndex {
 public:
  explicit CycleIndex(const FeedbackFunction& f, int max_order = 24);

  const std::vector<CycleRecord>& cycles() const noexcept { return cycles_; }
  std::size_t cycle_id(std::uint64_t state) const noexcept { return id_[state]; }
  std::size_t cycle_id(const BitWord& state) const noexcept { return id_[state.value()]; }
  const CycleRecord& cycle(const BitWord& state) const noexcept { return cycles_[cycle_id(state)]; }
  std::size_t find(const BitWord& necklace) const;  ///< throws if absent

 private:
  std::vector<CycleRecord> cycles_;
  std::vector<std::uint32_t> id_;
};

/// Z_n = (1/n) sum_{d | n} phi(d) 2^{n/d}. Defined for 1 <= n <= 57.
std::uint64_t pcr_cycle_count(int n);

/// Closed-form number of PSR cycles of order n (2 <= n <= 56).
std::uint64_t psr_cycle_count(int n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t m);

/// c_0, ..., c_{n-1}, c_0 + ... + c_{n-1}: the (n+1)-window of the PSR cycle
/// through c.
BitWord extend_psr_state(const BitWord& c);

}  // namespace debruijn
