#include "debruijn/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "debruijn/errors.hpp"
#include "debruijn/generator.hpp"
#include "debruijn/rule_json.hpp"

namespace debruijn {

using nlohmann::json;

std::uint64_t lcm_range(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || a > b) {
    throw PreconditionError("lcm_range needs 1 <= a <= b, got " + std::to_string(a) + ", " +
                            std::to_string(b));
  }
  std::uint64_t l = 1;
  for (std::uint64_t i = a; i <= b; ++i) {
    const std::uint64_t step = i / std::gcd(l, i);
    if (l > UINT64_MAX / step) throw PreconditionError("lcm_range overflows 64 bits");
    l *= step;
  }
  return l;
}

std::uint64_t lcm_even_range(int n) {
  return n < 2 ? 1 : 2 * lcm_range(1, static_cast<std::uint64_t>(n / 2));
}

namespace {

// Inverse of a modulo m for coprime a, m (1 when m == 1).
__int128 inverse_mod(__int128 a, __int128 m) {
  __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % m) + m) % m;
}

}  // namespace

CrtSolution gcrt_solve(const std::vector<Congruence>& system) {
  CrtSolution out;
  unsigned __int128 x = 0;
  unsigned __int128 m = 1;
  for (const Congruence& c : system) {
    if (c.modulus == 0) throw PreconditionError("gcrt_solve needs moduli >= 1");
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t g = std::gcd(system[i].modulus, system[j].modulus);
      if (system[i].residue % g != system[j].residue % g) {
        out.witness = {j, i};
        return out;
      }
    }
  }
  for (const Congruence& c : system) {
    // x + m t = a (mod c): solve for t modulo c / gcd(m, c).
    const auto mod = static_cast<__int128>(c.modulus);
    const auto g = static_cast<__int128>(std::gcd(static_cast<std::uint64_t>(m % c.modulus), c.modulus));
    const __int128 reduced = mod / g;
    const __int128 diff = ((static_cast<__int128>(c.residue % c.modulus) - static_cast<__int128>(x % c.modulus)) % mod + mod) % mod;
    const __int128 t = (diff / g) % reduced * inverse_mod(static_cast<__int128>(m) / g % reduced, reduced) % reduced;
    x += m * static_cast<unsigned __int128>(t);
    m *= static_cast<unsigned __int128>(reduced);
    if (m > UINT64_MAX) throw PreconditionError("gcrt_solve: lcm of the moduli overflows 64 bits");
    x %= m;
  }
  out.solvable = true;
  out.residue = static_cast<std::uint64_t>(x);
  out.modulus = static_cast<std::uint64_t>(m);
  return out;
}

namespace {

std::uint64_t saturating_lcm(std::uint64_t a, std::uint64_t b) {
  if (b < a) return 1;
  try {
    return lcm_range(a, b);
  } catch (const PreconditionError&) {
    return UINT64_MAX;
  }
}

std::uint64_t saturating_factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

bool is_single_rule(std::string_view family) {
  return family == "pcr-last-lz" || family == "pcr-first-eo" || family == "psr-index-s" ||
         family == "psr-index-t" || family == "jfb";
}

std::string canonical_family(std::string_view family) {
  if (family == "pcr-g") return "pcr-g";
  std::string name = resolve_family_name(family);
  if (name.empty()) throw SpecError({"unknown rule family \"" + std::string(family) + "\""});
  return name;
}

ParameterDomain table_domain(TableKind kind, int n, std::string description) {
  auto lists = std::make_shared<std::vector<std::vector<BitWord>>>();
  const auto f = kind == TableKind::kPcr ? FeedbackFunction::pcr(n) : FeedbackFunction::psr(n);
  for (const CycleRecord& r : decompose(f)) {
    auto choices = admissible_choices(kind, r.necklace);
    if (!choices.empty()) lists->push_back(std::move(choices));
  }
  ParameterDomain d;
  d.description = std::move(description);
  d.size = table_choice_count(kind, n);
  d.at = [lists, kind, n](std::uint64_t index) {
    std::vector<BitWord> choice;
    choice.reserve(lists->size());
    for (const auto& list : *lists) {
      choice.push_back(list[index % list.size()]);
      index /= list.size();
    }
    if (kind == TableKind::kPcr) return RuleSpec(n, PcrTable{std::move(choice)});
    return RuleSpec(n, PsrEoTable{std::move(choice)});
  };
  return d;
}

std::vector<int> g_map(int n, std::uint64_t index) {
  std::vector<int> g(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w) {
    g[static_cast<std::size_t>(w - 1)] = static_cast<int>(index % static_cast<std::uint64_t>(w));
    index /= static_cast<std::uint64_t>(w);
  }
  return g;
}

void check_budget(const ParameterDomain& d, std::string_view family, int n, std::uint64_t budget) {
  if (d.size > budget) {
    throw BudgetError("census of " + std::string(family) + " at n = " + std::to_string(n) + " needs " +
                          std::to_string(d.size) + " rules, over the budget of " +
                          std::to_string(budget),
                      d.size, budget);
  }
}

}  // namespace

ParameterDomain default_domain(std::string_view raw_family, int n, std::uint64_t budget) {
  const std::string family = canonical_family(raw_family);
  if (n < 2 || n > kMaxRuleOrder) {
    throw SpecError({"order n = " + std::to_string(n) + " outside 2.." + std::to_string(kMaxRuleOrder)});
  }
  ParameterDomain d;
  if (family == "pcr-lz-k" || family == "pcr-eo-k" || family == "psr-mixed-k" ||
      family == "psr-run-k") {
    const std::uint64_t top = family == "psr-mixed-k" ? static_cast<std::uint64_t>(n - 2)
                              : family == "psr-run-k" ? static_cast<std::uint64_t>(n)
                                                      : static_cast<std::uint64_t>(n - 1);
    d.size = saturating_lcm(1, top);
    d.description = "k in 0.." + std::to_string(d.size - 1);
    d.at = [family, n](std::uint64_t k) {
      if (family == "pcr-lz-k") return RuleSpec(n, PcrLzK{k});
      if (family == "pcr-eo-k") return RuleSpec(n, PcrEoK{k});
      if (family == "psr-mixed-k") return RuleSpec(n, PsrMixedK{k});
      return RuleSpec(n, PsrRunK{k});
    };
  } else if (family == "psr-eo-k") {
    d.size = n / 2 >= 1 ? saturating_lcm(1, static_cast<std::uint64_t>(n / 2)) : 1;
    d.size = d.size > UINT64_MAX / 2 ? UINT64_MAX : 2 * d.size;
    d.description = "k in 1.." + std::to_string(d.size);
    d.at = [n](std::uint64_t i) { return RuleSpec(n, PsrEoK{i + 1}); };
  } else if (family == "pcr-bands-lz" || family == "pcr-bands-eo") {
    d.size = n - 2 >= 64 ? UINT64_MAX : std::uint64_t{1} << (n - 2);
    d.description = "every ks-set";
    const bool lz = family == "pcr-bands-lz";
    d.at = [n, lz](std::uint64_t mask) {
      std::vector<int> ks{1};
      for (int k = 2; k <= n - 1; ++k) {
        if ((mask >> (k - 2)) & 1U) ks.push_back(k);
      }
      ks.push_back(n + 1);
      if (lz) return RuleSpec(n, PcrWeightBandsLz{std::move(ks)});
      return RuleSpec(n, PcrWeightBandsEo{std::move(ks)});
    };
  } else if (family == "pcr-g-lz" || family == "pcr-g-eo" || family == "pcr-g") {
    const std::uint64_t maps = saturating_factorial(n);
    const bool both = family == "pcr-g";
    d.size = both ? (maps > UINT64_MAX / 2 ? UINT64_MAX : 2 * maps) : maps;
    d.description = both ? "every g map, both shift operators" : "every g map";
    const bool lz = family == "pcr-g-lz";
    d.at = [n, maps, both, lz](std::uint64_t i) {
      if (both) {
        if (i < maps) return RuleSpec(n, PcrGLz{g_map(n, i)});
        return RuleSpec(n, PcrGEo{g_map(n, i - maps)});
      }
      if (lz) return RuleSpec(n, PcrGLz{g_map(n, i)});
      return RuleSpec(n, PcrGEo{g_map(n, i)});
    };
  } else if (family == "pcr-table" || family == "psr-eo-table") {
    const TableKind kind = family == "pcr-table" ? TableKind::kPcr : TableKind::kPsrEo;
    // Counting needs only a cycle sweep; check before building the decoder.
    ParameterDomain probe;
    probe.size = table_choice_count(kind, n);
    check_budget(probe, family, n, budget);
    return table_domain(kind, n, "every table choice");
  } else {
    d.size = 1;
    d.description = "single rule";
    d.at = [family, n](std::uint64_t) {
      if (family == "jfb") return RuleSpec(n, Jfb{FeedbackFunction::pcr(n)});
      return RuleSpec(n, family_from_json(n, family, json::object()));
    };
  }
  check_budget(d, family, n, budget);
  return d;
}

std::optional<ExpectedCount> expected_count(std::string_view raw_family, int n) {
  const std::string family = canonical_family(raw_family);
  if (family == "pcr-lz-k" || family == "pcr-eo-k") {
    return ExpectedCount{lcm_range(1, static_cast<std::uint64_t>(n - 1)), "lcm(1..n-1)"};
  }
  if (family == "pcr-bands-lz" || family == "pcr-bands-eo") {
    return ExpectedCount{std::uint64_t{1} << (n - 2), "2^(n-2)"};
  }
  if (family == "pcr-g-lz" || family == "pcr-g-eo") {
    return ExpectedCount{saturating_factorial(n - 1), "(n-1)!"};
  }
  if (family == "pcr-g") return ExpectedCount{2 * saturating_factorial(n - 1), "2*(n-1)!"};
  if (family == "pcr-table") {
    return ExpectedCount{table_choice_count(TableKind::kPcr, n),
                         "product of LZ states per cycle"};
  }
  if (family == "psr-eo-table") {
    return ExpectedCount{table_choice_count(TableKind::kPsrEo, n),
                         "product of admissible EO states per cycle"};
  }
  if (family == "psr-eo-k") return ExpectedCount{lcm_even_range(n) - 1, "lcm(2,4,..,2*floor(n/2))-1"};
  if (family == "psr-mixed-k") {
    return ExpectedCount{n >= 3 ? lcm_range(1, static_cast<std::uint64_t>(n - 2)) : 1, "lcm(1..n-2)"};
  }
  if (is_single_rule(family)) return ExpectedCount{1, "single rule"};
  return std::nullopt;
}

std::optional<bool> CensusReport::match() const {
  if (!expected) return std::nullopt;
  return expected->value == distinct;
}

json CensusReport::to_json() const {
  json j{{"family", family},         {"n", n},
         {"domain", domain},         {"enumerated", enumerated},
         {"distinct", distinct},     {"all_de_bruijn", all_de_bruijn},
         {"seconds", seconds}};
  if (expected) {
    j["expected"] = expected->value;
    j["formula"] = expected->formula;
    j["match"] = *match();
  } else {
    j["expected"] = nullptr;
    j["formula"] = nullptr;
    j["match"] = nullptr;
  }
  return j;
}

std::string CensusReport::text() const {
  std::ostringstream out;
  const auto row = [&](const char* key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << '\n';
  };
  row("family", family);
  row("n", std::to_string(n));
  row("domain", domain);
  row("enumerated", std::to_string(enumerated));
  row("distinct", std::to_string(distinct));
  row("expected", expected ? std::to_string(expected->value) + " = " + expected->formula : "n/a");
  row("match", expected ? (*match() ? "true" : "false") : "n/a");
  row("de-bruijn", all_de_bruijn ? "all" : "FAILED");
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << seconds << " s";
  row("time", secs.str());
  return out.str();
}

CensusReport run_census(std::string_view family, int n, const ParameterDomain& domain,
                        unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(domain.size, 1)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> all_ok{true};
  std::mutex merge_lock;
  std::unordered_set<std::string> distinct;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        std::unordered_set<std::string> local;
        try {
          for (std::uint64_t i = next++; i < domain.size; i = next++) {
            const GeneratedSequence seq = generate(domain.at(i));
            if (!verify_de_bruijn(seq)) all_ok = false;
            local.insert(seq.bits.str());
          }
        } catch (...) {
          const std::lock_guard lock(merge_lock);
          if (!failure) failure = std::current_exception();
          next = domain.size;
        }
        const std::lock_guard lock(merge_lock);
        distinct.merge(local);
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  CensusReport r;
  r.family = std::string(family);
  r.n = n;
  r.domain = domain.description;
  r.enumerated = domain.size;
  r.distinct = distinct.size();
  r.expected = expected_count(family, n);
  r.all_de_bruijn = all_ok;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CensusReport run_census(std::string_view family, int n, std::uint64_t budget, unsigned threads) {
  return run_census(family, n, default_domain(family, n, budget), threads);
}

}  // namespace debruijn
