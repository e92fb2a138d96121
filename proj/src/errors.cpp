#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out = "invalid rule spec";
  for (const auto& l : lines) out += "\n  - " + l;
  return out;
}

}  // namespace

SpecError::SpecError(std::vector<std::string> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

BudgetError::BudgetError(const std::string& what, std::uint64_t predicted, std::uint64_t budget)
    : Error(what), predicted_(predicted), budget_(budget) {}

ClosureError::ClosureError(std::uint64_t position, std::uint64_t period)
    : Error("rule is not de Bruijn: state repeated at step " + std::to_string(position) +
            " closing a cycle of period " + std::to_string(period)),
      position_(position),
      period_(period) {}

TreeError::TreeError(const std::string& what, std::vector<std::string> cycles)
    : Error(what), cycles_(std::move(cycles)) {}

}  // namespace debruijn
