#pragma once

// Representative parameter sets for every family, shared by the tests.

#include <random>
#include <vector>

#include "debruijn/census.hpp"
#include "debruijn/rules.hpp"

namespace families {

using namespace debruijn;

inline std::vector<int> random_ks(int n, std::mt19937_64& rng) {
  std::vector<int> ks{1};
  for (int k = 2; k <= n - 1; ++k) {
    if (rng() & 1U) ks.push_back(k);
  }
  ks.push_back(n + 1);
  return ks;
}

inline std::vector<int> random_g(int n, std::mt19937_64& rng) {
  std::vector<int> g;
  for (int w = 1; w <= n; ++w) g.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(w)));
  return g;
}

inline std::vector<BitWord> random_choice(TableKind kind, int n, std::mt19937_64& rng) {
  std::vector<BitWord> out;
  const auto f = kind == TableKind::kPcr ? FeedbackFunction::pcr(n) : FeedbackFunction::psr(n);
  for (const auto& c : decompose(f)) {
    const auto options = admissible_choices(kind, c.necklace);
    if (!options.empty()) out.push_back(options[rng() % options.size()]);
  }
  return out;
}

/// k in {0, 1, 2, period - 1} for the shift families, three random ks-sets,
/// g maps and table choices, and every parameterless family.
inline std::vector<RuleSpec> representatives(int n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  std::vector<RuleSpec> out;
  const std::uint64_t pcr_period = lcm_range(1, static_cast<std::uint64_t>(n - 1));
  const std::uint64_t eo_period = lcm_even_range(n);
  const std::uint64_t mixed_period = n >= 3 ? lcm_range(1, static_cast<std::uint64_t>(n - 2)) : 1;
  const std::uint64_t run_period = lcm_range(1, static_cast<std::uint64_t>(n));
  for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, pcr_period - 1}) {
    out.emplace_back(n, PcrLzK{k});
    out.emplace_back(n, PcrEoK{k});
  }
  for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, run_period - 1}) {
    out.emplace_back(n, PsrRunK{k});
  }
  for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, eo_period - 1}) {
    out.emplace_back(n, PsrEoK{k});
  }
  for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, mixed_period - 1}) {
    out.emplace_back(n, PsrMixedK{k});
  }
  for (int i = 0; i < 3; ++i) {
    out.emplace_back(n, PcrWeightBandsLz{random_ks(n, rng)});
    out.emplace_back(n, PcrWeightBandsEo{random_ks(n, rng)});
    out.emplace_back(n, PcrGLz{random_g(n, rng)});
    out.emplace_back(n, PcrGEo{random_g(n, rng)});
    out.emplace_back(n, PcrTable{random_choice(TableKind::kPcr, n, rng)});
    out.emplace_back(n, PsrEoTable{random_choice(TableKind::kPsrEo, n, rng)});
  }
  out.emplace_back(n, PcrLastLz{});
  out.emplace_back(n, PcrFirstEo{});
  out.emplace_back(n, PsrIndexS{});
  out.emplace_back(n, PsrIndexT{});
  out.emplace_back(n, Jfb{FeedbackFunction::pcr(n)});
  out.emplace_back(n, Jfb{FeedbackFunction::psr(n)});
  out.emplace_back(n, Jfb{FeedbackFunction::csr(n)});
  return out;
}

/// Whether the base register is the PSR (fired pairs then join PSR cycles).
inline std::uint64_t cycle_count(const RuleSpec& spec) {
  const auto& f = spec.base();
  if (f.kind() == RegisterKind::kPcr) return pcr_cycle_count(spec.order());
  if (f.kind() == RegisterKind::kPsr) return psr_cycle_count(spec.order());
  return decompose(f).size();
}

}  // namespace families
