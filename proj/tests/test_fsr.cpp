#include <random>

#include "debruijn/errors.hpp"
#include "debruijn/fsr.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace debruijn;

namespace {

BitWord W(const char* s) { return BitWord::parse(s); }

std::vector<std::string> necklaces(const std::vector<CycleRecord>& cycles) {
  std::vector<std::string> out;
  for (const auto& c : cycles) out.push_back(c.necklace.str());
  return out;
}

// A random nonsingular table: f = x_0 + h(x_1..x_{n-1}).
TruthTable random_nonsingular(int n, std::mt19937_64& rng) {
  TruthTable t(n);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 0; x < half; ++x) {
    const int h = static_cast<int>(rng() & 1U);
    t.set(x, h);
    t.set(x | half, h ^ 1);
  }
  return t;
}

}  // namespace

TEST_CASE("evaluate and step") {
  CHECK(FeedbackFunction::pcr(6).evaluate(W("101100")) == 1);
  CHECK(FeedbackFunction::psr(6).evaluate(W("101100")) == 1);
  CHECK(FeedbackFunction::csr(6).evaluate(W("101100")) == 0);
  CHECK(FeedbackFunction::pcr(6).step(W("011010")) == W("110100"));
  CHECK(FeedbackFunction::psr(6).step(W("000001")) == W("000011"));
  CHECK(FeedbackFunction::psr(6).step(W("000011")) == W("000110"));
  CHECK_THROWS_AS(FeedbackFunction::pcr(6).evaluate(W("10110")), PreconditionError);
  for (std::uint64_t v = 0; v < 256; ++v) {
    const BitWord w(8, v);
    CHECK(FeedbackFunction::pcr(8).step(w) == rotate_left(w, 1));
  }
}

TEST_CASE("explicit tables") {
  const auto f = FeedbackFunction::table(FeedbackFunction::psr(4).tabulate());
  CHECK(f.kind() == RegisterKind::kTable);
  CHECK(f.name() == "table");
  for (std::uint64_t v = 0; v < 16; ++v) {
    CHECK(f.evaluate(BitWord(4, v)) == FeedbackFunction::psr(4).evaluate(BitWord(4, v)));
  }
  CHECK_THROWS_AS(FeedbackFunction::table(TruthTable(3)), PreconditionError);
  CHECK_THROWS_AS(FeedbackFunction::pcr(4).truth_table(), PreconditionError);
}

TEST_CASE("decompose examples") {
  CHECK(decompose(FeedbackFunction::pcr(6)).size() == 14);
  CHECK(decompose(FeedbackFunction::psr(6)).size() == 10);
  CHECK(necklaces(decompose(FeedbackFunction::pcr(2))) == std::vector<std::string>{"00", "01", "11"});
  CHECK(necklaces(decompose(FeedbackFunction::psr(6))) ==
        std::vector<std::string>{"0000000", "0000011", "0000101", "0001001", "0001111", "0010111",
                                 "0011011", "0011101", "0101011", "0111111"});
  CHECK_THROWS_AS(decompose(FeedbackFunction::pcr(27)), BudgetError);
  CHECK_THROWS_AS(decompose(FeedbackFunction::pcr(10), 8), BudgetError);
}

TEST_CASE("decomposition partitions the states") {
  for (int n = 2; n <= 16; ++n) {
    for (const auto& f : {FeedbackFunction::pcr(n), FeedbackFunction::psr(n), FeedbackFunction::csr(n)}) {
      const auto cycles = decompose(f);
      std::uint64_t total = 0;
      for (const auto& c : cycles) {
        total += c.state_count;
        REQUIRE(is_necklace(c.necklace));
        REQUIRE(c.state_count == static_cast<std::uint64_t>(c.least_period));
        REQUIRE(c.weight == weight(c.necklace));
        if (f.kind() == RegisterKind::kPcr) {
          REQUIRE(c.necklace.size() == n);
        } else {
          REQUIRE(c.necklace.size() == n + 1);
          REQUIRE((n + 1) % c.least_period == 0);
          REQUIRE(c.weight % 2 == (f.kind() == RegisterKind::kPsr ? 0 : 1));
        }
      }
      REQUIRE(total == (std::uint64_t{1} << n));
      for (std::size_t i = 1; i < cycles.size(); ++i) REQUIRE(cycles[i - 1].necklace < cycles[i].necklace);
    }
  }
}

TEST_CASE("cycle counts") {
  CHECK(pcr_cycle_count(6) == 14);
  CHECK(pcr_cycle_count(1) == 2);
  CHECK(psr_cycle_count(6) == 10);
  CHECK(psr_cycle_count(2) == 2);
  for (int n = 2; n <= 16; ++n) {
    REQUIRE(pcr_cycle_count(n) == decompose(FeedbackFunction::pcr(n)).size());
    REQUIRE(psr_cycle_count(n) == decompose(FeedbackFunction::psr(n)).size());
    if (n <= 14) REQUIRE(pcr_cycle_count(n) == oracle::necklace_count(n));
  }
  for (int n = 2; n <= 10; ++n) {
    REQUIRE(psr_cycle_count(n) ==
            oracle::cycles([](const oracle::Word& s) { return oracle::parity(s); }, n).size());
  }
  CHECK(pcr_cycle_count(57) > 0);
  CHECK_THROWS_AS(psr_cycle_count(1), PreconditionError);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("every PCR cycle has constant weight") {
  const auto f = FeedbackFunction::pcr(10);
  for (std::uint64_t v = 0; v < 1024; ++v) {
    const BitWord s(10, v);
    REQUIRE(cycle_of(f, s).weight == weight(s));
  }
}

TEST_CASE("cycle index and explicit table cycles") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    const auto f = FeedbackFunction::table(random_nonsingular(n, rng));
    const CycleIndex index(f);
    const auto base = oracle::base_of(f);
    const auto expected = oracle::cycles(base, n);
    REQUIRE(index.cycles().size() == expected.size());
    std::uint64_t total = 0;
    for (const auto& c : index.cycles()) {
      total += c.state_count;
      REQUIRE(expected.count(c.representative.str()) == 1);
    }
    REQUIRE(total == (std::uint64_t{1} << n));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const BitWord s(n, v);
      REQUIRE(index.cycle(s).representative.str() == oracle::cycle_min(base, s.str()));
      REQUIRE(cycle_of(f, s) == index.cycle(s));
    }
  }
  const CycleIndex pcr(FeedbackFunction::pcr(6));
  CHECK(pcr.cycles()[pcr.find(W("001011"))].least_period == 6);
  CHECK_THROWS_AS(pcr.find(W("010110")), PreconditionError);
}

TEST_CASE("extend psr state") {
  CHECK(extend_psr_state(W("000000")) == W("0000000"));
  CHECK(extend_psr_state(W("010101")) == W("0101011"));
  CHECK(extend_psr_state(W("101010")) == W("1010101"));
  CHECK(least_rotation(extend_psr_state(W("101010"))) == W("0101011"));
}
