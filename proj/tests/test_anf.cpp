#include <random>

#include "debruijn/anf.hpp"
#include "debruijn/errors.hpp"
#include "debruijn/rule_json.hpp"
#include "doctest.h"
#include "families.hpp"
#include "oracle.hpp"

using namespace debruijn;

namespace {

TruthTable random_table(int m, std::mt19937_64& rng) {
  TruthTable t(m);
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, static_cast<int>(rng() & 1U));
  return t;
}

}  // namespace

TEST_CASE("anf examples") {
  CHECK(to_anf(TruthTable::parse(2, "1111")).monomials() == std::vector<std::uint32_t>{0});
  CHECK(to_anf(TruthTable::parse(2, "1111")).str() == "1");
  // x_0 is the most significant index bit.
  CHECK(to_anf(TruthTable::parse(2, "0011")).monomials() == std::vector<std::uint32_t>{1});
  CHECK(to_anf(TruthTable::parse(2, "0011")).str() == "x0");
  CHECK(to_anf(TruthTable(3)).str() == "0");
  const AnfPolynomial p(4, {0b0001, 0b1010, 0});
  CHECK(p.str() == "x0 ⊕ x1x3 ⊕ 1");
  CHECK(p.degree() == 2);
  CHECK(to_anf(p.to_table()) == p);
  CHECK_THROWS_AS(AnfPolynomial(2, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(AnfPolynomial(2, {4}), PreconditionError);
}

TEST_CASE("anf round trip on random tables") {
  std::mt19937_64 rng(19);
  for (int m = 0; m <= 12; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto t = random_table(m, rng);
      const auto p = to_anf(t);
      REQUIRE(p.to_table() == t);
      if (m >= 1 && m <= 8) {
        for (std::uint64_t i = 0; i < t.size(); ++i) REQUIRE(p.evaluate(BitWord(m, i)) == t[i]);
      }
    }
  }
}

TEST_CASE("necklace indicator") {
  CHECK(necklace_indicator(6)[0] == 1);
  CHECK(necklace_indicator(6).at(BitWord::parse("010110")) == 0);
  for (int n = 1; n <= 12; ++n) {
    const auto t = necklace_indicator(n);
    for (std::uint64_t v = 0; v < t.size(); ++v) REQUIRE(t[v] == static_cast<int>(is_necklace(BitWord(n, v))));
  }
}

TEST_CASE("h from pairs") {
  CHECK(h_from_pairs(std::vector<BitWord>{}, 6).weight() == 0);
  CHECK_THROWS_AS(h_from_pairs(std::vector<BitWord>{BitWord::parse("000000")}, 6), PreconditionError);
  for (int n = 3; n <= 12; ++n) {
    for (const auto& spec : families::representatives(n, 29)) {
      INFO(to_json(spec).dump());
      const auto h = h_from_pairs(fired_pairs(spec), n);
      REQUIRE(h.weight() == families::cycle_count(spec) - 1);
    }
  }
}

TEST_CASE("run-order feedback reproduces its sequence") {
  const RuleSpec spec(6, PsrRunK{0});
  const auto h = h_from_pairs(fired_states(spec), 6);
  // f = x_0 + x_1 + ... + x_5 + h(x_1..x_5)
  TruthTable f(6);
  for (std::uint64_t x = 0; x < 64; ++x) f.set(x, (std::popcount(x) & 1) ^ h[x & 31]);
  CHECK(generate(FeedbackFunction::table(f), BitWord::zeros(6)).bits.str() ==
        "0000001001000101110010101101010000111010011111101111000110110011");
}

TEST_CASE("rule feedback round trips") {
  for (int n = 3; n <= 10; ++n) {
    for (const auto& spec : families::representatives(n, 31)) {
      INFO(to_json(spec).dump());
      const auto table = rule_feedback(spec);
      for (std::uint64_t x = 0; x < table.size(); ++x) REQUIRE(table[x] == spec.next_bit_packed(x));
      const auto f = FeedbackFunction::table(table);
      REQUIRE(decompose(f).size() == 1);
      REQUIRE(generate(f, BitWord::zeros(n)).bits == generate(spec).bits);
    }
  }
}

TEST_CASE("closed forms for the two necklace rules") {
  for (int n = 3; n <= 10; ++n) {
    const auto neck = necklace_indicator(n);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const auto lz = rule_feedback(RuleSpec(n, PcrLzK{0}));
    const auto eo = rule_feedback(RuleSpec(n, PcrEoK{0}));
    TruthTable cor1(n);
    TruthTable cor2(n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const int x0 = static_cast<int>(x >> (n - 1));
      const std::uint64_t rest = x & (half - 1);
      cor1.set(x, x0 ^ neck[rest]);
      cor2.set(x, x0 ^ neck[(rest << 1) | 1]);
    }
    CHECK(lz == cor1);
    CHECK(eo == cor2);
  }
}
