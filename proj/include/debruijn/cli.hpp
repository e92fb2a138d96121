#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "debruijn/rules.hpp"

namespace debruijn {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the tool on `args` (without the program name). Reads sequences from
/// `in` when no input file is given and writes results to `out` unless
/// --out redirects them; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// "8..24" or "12". Throws ParseError.
std::vector<int> parse_order_range(const std::string& text);

struct BenchPoint {
  int n = 0;
  std::uint64_t bits = 0;
  double ns_per_bit = 0;
};

/// Streams `bits` bits of the rule from 0^n and returns the fastest of
/// `repeats` timed runs.
BenchPoint bench_stream(const RuleSpec& spec, std::uint64_t bits, int repeats = 3);

/// Least-squares fit t(n) = a + b n + c n^2 of per-bit time against n.
struct GrowthFit {
  double intercept = 0;
  double slope = 0;
  double curvature = 0;
  /// Share of the fitted cost at the largest n contributed by a positive
  /// quadratic term over the measured range: max(c, 0) (n_max - n_min)^2 / t(n_max).
  /// Zero when the cost grows at most linearly.
  double superlinear = 0;
};
/// Needs at least three distinct orders. Throws PreconditionError otherwise.
GrowthFit fit_growth(const std::vector<BenchPoint>& points);

}  // namespace debruijn
