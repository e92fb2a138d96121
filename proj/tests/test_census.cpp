#include <random>

#include "debruijn/census.hpp"
#include "debruijn/errors.hpp"
#include "doctest.h"

using namespace debruijn;

TEST_CASE("lcm") {
  CHECK(lcm_range(1, 5) == 60);
  CHECK(lcm_range(1, 4) == 12);
  CHECK(lcm_range(1, 1) == 1);
  CHECK(lcm_range(3, 4) == 12);
  CHECK(lcm_even_range(6) == 12);
  CHECK(lcm_even_range(7) == 12);
  CHECK_THROWS_AS(lcm_range(0, 3), PreconditionError);
  CHECK_THROWS_AS(lcm_range(1, 100), PreconditionError);
}

TEST_CASE("lower bounds") {
  for (int n = 3; n <= 20; ++n) {
    CHECK(lcm_range(1, static_cast<std::uint64_t>(n - 1)) >= (std::uint64_t{1} << (n - 2)));
    CHECK(lcm_even_range(n) - 1 >= (std::uint64_t{1} << (n / 2)) - 1);
  }
}

TEST_CASE("generalized chinese remainder") {
  auto s = gcrt_solve({{1, 2}, {1, 3}});
  CHECK(s.solvable);
  CHECK(s.residue == 1);
  CHECK(s.modulus == 6);
  s = gcrt_solve({{0, 2}, {1, 4}});
  CHECK_FALSE(s.solvable);
  CHECK(s.witness == std::pair<std::size_t, std::size_t>{0, 1});
  s = gcrt_solve({});
  CHECK(s.solvable);
  CHECK(s.modulus == 1);
  CHECK_THROWS_AS(gcrt_solve({{0, 0}}), PreconditionError);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t x = rng() % 1000000;
    std::vector<Congruence> system;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      const std::uint64_t m = 1 + rng() % 40;
      system.push_back({x % m + m * (rng() % 3), m});
    }
    const auto sol = gcrt_solve(system);
    REQUIRE(sol.solvable);
    std::uint64_t l = 1;
    for (const auto& c : system) l = std::lcm(l, c.modulus);
    REQUIRE(sol.modulus == l);
    REQUIRE(sol.residue == x % l);
    for (const auto& c : system) REQUIRE(sol.residue % c.modulus == c.residue % c.modulus);
    // Perturb one residue: solvable iff the pairwise gcd condition still holds.
    system[0].residue += 1;
    bool pairwise = true;
    for (std::size_t i = 0; i < system.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto g = std::gcd(system[i].modulus, system[j].modulus);
        pairwise = pairwise && system[i].residue % g == system[j].residue % g;
      }
    }
    const auto perturbed = gcrt_solve(system);
    REQUIRE(perturbed.solvable == pairwise);
    if (pairwise) {
      for (const auto& c : system) REQUIRE(perturbed.residue % c.modulus == c.residue % c.modulus);
    } else {
      const auto [a, b] = perturbed.witness;
      const auto g = std::gcd(system[a].modulus, system[b].modulus);
      REQUIRE(system[a].residue % g != system[b].residue % g);
    }
  }
}

TEST_CASE("counts at n = 6") {
  struct Row {
    const char* family;
    std::uint64_t distinct;
  };
  for (const Row& row : {Row{"pcr-bands-lz", 16}, Row{"pcr-bands-eo", 16}, Row{"pcr-lz-k", 60},
                         Row{"pcr-eo-k", 60}, Row{"pcr-g-lz", 120}, Row{"pcr-g-eo", 120},
                         Row{"pcr-g", 240}, Row{"psr-eo-k", 11}, Row{"psr-mixed-k", 12},
                         Row{"psr-eo-table", 1215}, Row{"pcr-last-lz", 1}}) {
    const auto r = run_census(row.family, 6);
    INFO(r.text());
    CHECK(r.distinct == row.distinct);
    CHECK(r.match() == std::optional<bool>(true));
    CHECK(r.all_de_bruijn);
  }
  const auto run = run_census("psr-run-k", 6);
  CHECK(run.distinct == 3);
  CHECK_FALSE(run.match().has_value());
  CHECK(run.to_json()["match"].is_null());
}

TEST_CASE("counts are independent of the thread count") {
  const auto d = default_domain("pcr-g", 5);
  const auto one = run_census("pcr-g", 5, d, 1);
  const auto four = run_census("pcr-g", 5, d, 4);
  CHECK(one.distinct == four.distinct);
  CHECK(one.distinct == 48);
}

TEST_CASE("budget refusals") {
  try {
    run_census("pcr-table", 7);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.predicted() == 1492992000ULL);
    CHECK(e.budget() == kDefaultCensusBudget);
  }
  CHECK(expected_count("pcr-table", 7)->value == 1492992000ULL);
  CHECK_THROWS_AS(run_census("pcr-lz-k", 6, 10), BudgetError);
  CHECK_THROWS_AS(run_census("pcr-g-lz", 10), BudgetError);
  CHECK_THROWS_AS(run_census("nope", 6), SpecError);
}

TEST_CASE("report output") {
  const auto r = run_census("pcr-lz-k", 4);
  CHECK(r.distinct == 6);
  const auto j = r.to_json();
  CHECK(j["family"] == "pcr-lz-k");
  CHECK(j["distinct"] == 6);
  CHECK(j["expected"] == 6);
  CHECK(j["formula"] == "lcm(1..n-1)");
  CHECK(j["match"] == true);
  CHECK(r.text().find("match         true") != std::string::npos);
}
