#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace debruijn {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its domain
/// (e.g. shift_lz on a word that does not start with 0).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text that should have been a bit word, table or spec could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A RuleSpec violates one of its invariants. Carries every violation found.
class SpecError : public Error {
 public:
  explicit SpecError(std::vector<std::string> diagnostics);

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// A sweep or census would exceed its configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t predicted, std::uint64_t budget);

  /// Predicted amount of work (states, sequences, ...). Saturates at UINT64_MAX.
  std::uint64_t predicted() const noexcept { return predicted_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t budget_;
};

/// Generation revisited a state before covering all 2^n of them.
class ClosureError : public Error {
 public:
  ClosureError(std::uint64_t position, std::uint64_t period);

  /// Index of the step at which the repeated state was produced.
  std::uint64_t position() const noexcept { return position_; }
  /// Length of the premature cycle the walk fell into.
  std::uint64_t period() const noexcept { return period_; }

 private:
  std::uint64_t position_;
  std::uint64_t period_;
};

/// Fired pairs that do not form a spanning tree of the cycles.
class TreeError : public Error {
 public:
  TreeError(const std::string& what, std::vector<std::string> cycles);

  /// Necklaces of the offending cycles.
  const std::vector<std::string>& cycles() const noexcept { return cycles_; }

 private:
  std::vector<std::string> cycles_;
};

}  // namespace debruijn
