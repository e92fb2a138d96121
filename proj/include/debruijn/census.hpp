#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "debruijn/rules.hpp"
#include "json.hpp"

namespace debruijn {

/// lcm(a, a+1, ..., b). Throws PreconditionError on overflow or a bad range.
std::uint64_t lcm_range(std::uint64_t a, std::uint64_t b);

/// lcm(2, 4, ..., 2 floor(n/2)); 1 when n < 2.
std::uint64_t lcm_even_range(int n);

struct Congruence {
  std::uint64_t residue;
  std::uint64_t modulus;
};

struct CrtSolution {
  bool solvable = false;
  std::uint64_t residue = 0;  ///< the solution, when solvable
  std::uint64_t modulus = 1;  ///< lcm of the moduli, when solvable
  /// Indices of two congruences that disagree modulo the gcd of their moduli.
  std::pair<std::size_t, std::size_t> witness{0, 0};
};

/// Solves x = a_i (mod m_i) for all i, with moduli that need not be coprime.
CrtSolution gcrt_solve(const std::vector<Congruence>& system);

inline constexpr std::uint64_t kDefaultCensusBudget = 1'000'000;

/// An indexed set of rules of one family.
struct ParameterDomain {
  std::string description;
  std::uint64_t size = 0;
  std::function<RuleSpec(std::uint64_t)> at;
};

/// The full parameter range of a family: k over one lcm period, every
/// ks-set, every g map, every table choice. "pcr-g" is the union of the two
/// g families. Throws BudgetError, carrying the size, above `budget`.
ParameterDomain default_domain(std::string_view family, int n,
                               std::uint64_t budget = kDefaultCensusBudget);

/// Predicted number of distinct sequences and the name of its formula, when
/// one is known for the family.
struct ExpectedCount {
  std::uint64_t value;
  std::string formula;
};
std::optional<ExpectedCount> expected_count(std::string_view family, int n);

struct CensusReport {
  std::string family;
  int n = 0;
  std::string domain;
  std::uint64_t enumerated = 0;
  std::uint64_t distinct = 0;
  std::optional<ExpectedCount> expected;
  bool all_de_bruijn = true;
  double seconds = 0;

  /// distinct == expected; nullopt when there is no formula.
  std::optional<bool> match() const;
  nlohmann::json to_json() const;
  /// One aligned table row per field.
  std::string text() const;
};

/// Generates every rule in the domain from 0^n, verifies each sequence and
/// counts distinct ones. `threads` = 0 uses the hardware concurrency.
CensusReport run_census(std::string_view family, int n, const ParameterDomain& domain,
                        unsigned threads = 0);
CensusReport run_census(std::string_view family, int n,
                        std::uint64_t budget = kDefaultCensusBudget, unsigned threads = 0);

}  // namespace debruijn
