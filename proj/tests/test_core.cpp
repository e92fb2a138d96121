#include <random>

#include "debruijn/bitstring.hpp"
#include "debruijn/bitword.hpp"
#include "debruijn/errors.hpp"
#include "debruijn/truth_table.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace debruijn;

namespace {

BitWord W(const char* s) { return BitWord::parse(s); }

std::vector<BitWord> all_words(int m) {
  std::vector<BitWord> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) out.emplace_back(m, v);
  return out;
}

oracle::Shape oracle_shape(Shift op) {
  switch (op) {
    case Shift::kLeadingZero:
      return oracle::kLz;
    case Shift::kEndingOne:
      return oracle::kEo;
    case Shift::kMaxZeroRun:
      return oracle::kRz;
    case Shift::kDoubleZero:
      return oracle::kDz;
  }
  return {};
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(W("010110").str() == "010110");
  CHECK(W("010110").size() == 6);
  CHECK(W("010110")[1] == 1);
  CHECK(W("010110").front() == 0);
  CHECK(W("010110").back() == 0);
  CHECK(W(std::string(64, '1').c_str()).value() == ~std::uint64_t{0});
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("01x"), ParseError);
  CHECK_THROWS_AS(W(std::string(65, '0').c_str()), ParseError);
  CHECK_THROWS_AS(BitWord(3, 8), PreconditionError);
  CHECK_THROWS_AS(BitWord(0, 0), PreconditionError);
}

TEST_CASE("lexicographic order matches strings") {
  const auto ws = all_words(4);
  for (const auto& a : ws) {
    for (const auto& b : ws) CHECK(((a < b) == (a.str() < b.str())));
  }
  CHECK(W("01") < W("010"));
  CHECK(W("1") > W("011"));
}

TEST_CASE("weight") {
  CHECK(weight(W("011111")) == 5);
  CHECK(weight(W("000000")) == 0);
  CHECK(weight(W("001110")) == 3);
}

TEST_CASE("conjugate and companion") {
  CHECK(conjugate(W("001011")) == W("101011"));
  CHECK(companion(W("001011")) == W("001010"));
  CHECK(complement(W("001011")) == W("110100"));
  for (const auto& w : all_words(7)) {
    CHECK(conjugate(conjugate(w)) == w);
    CHECK(companion(companion(w)) == w);
    CHECK(std::abs(weight(conjugate(w)) - weight(w)) == 1);
    CHECK(std::abs(weight(companion(w)) - weight(w)) == 1);
  }
}

TEST_CASE("rotations") {
  CHECK(rotate_left(W("010110"), 1) == W("101100"));
  CHECK(rotate_right(W("010110"), 1) == W("001011"));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 64);
    const BitWord w(m, m == 64 ? rng() : rng() & ((std::uint64_t{1} << m) - 1));
    const auto k = static_cast<std::int64_t>(rng() % 1000) - 500;
    CHECK(rotate_left(w, 0) == w);
    CHECK(rotate_right(rotate_left(w, 1), 1) == w);
    CHECK(rotate_left(w, k) == rotate_left(w, ((k % m) + m) % m));
    CHECK(rotate_left(w, k).str() == oracle::rot(w.str(), static_cast<std::size_t>(((k % m) + m) % m)));
  }
}

TEST_CASE("necklaces against brute force") {
  CHECK(is_necklace(W("000000")));
  CHECK_FALSE(is_necklace(W("000010")));
  CHECK(is_necklace(W("0011101")));
  for (int m = 1; m <= 16; ++m) {
    for (const auto& w : all_words(m)) {
      const auto s = w.str();
      REQUIRE(is_necklace(w) == oracle::is_necklace(s));
      REQUIRE(least_period(w) == oracle::least_period(s));
      if (m <= 12) REQUIRE(least_rotation(w).str() == oracle::least_rotation(s));
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 17 + static_cast<int>(rng() % 48);
    const BitWord w(m, m == 64 ? rng() : rng() & ((std::uint64_t{1} << m) - 1));
    REQUIRE(least_rotation(w).str() == oracle::least_rotation(w.str()));
  }
}

TEST_CASE("max zero run") {
  CHECK(max_zero_run(W("0000101")).length() == 4);
  CHECK(max_zero_run(W("0011011")).length() == 2);
  CHECK(max_zero_run(W("0000000")).is_infinite());
  CHECK(max_zero_run(W("1111")).length() == 0);
  CHECK(max_zero_run(W("0111110")).length() == 2);
  CHECK(RunLength::infinite() > RunLength(63));
  for (const auto& w : all_words(10)) {
    const int o = oracle::max_zero_run(w.str());
    if (o < 0) {
      CHECK(max_zero_run(w).is_infinite());
    } else {
      CHECK(max_zero_run(w).length() == o);
    }
  }
}

TEST_CASE("shift operator examples") {
  CHECK(shift_lz(W("001011")) == W("010110"));
  CHECK(shift_lz(W("010110")) == W("011001"));
  CHECK(shift_lz(W("011111")) == W("011111"));
  CHECK(shift_eo(W("001011")) == W("011001"));
  CHECK(shift_eo(W("011001")) == W("100101"));
  CHECK(shift_eo(W("000001")) == W("000001"));
  CHECK(shift_rz(W("0101011")) == W("0101101"));
  CHECK(shift_rz(W("0101101")) == W("0110101"));
  CHECK(shift_rz(W("0000011")) == W("0000011"));
  CHECK(shift_dz(W("0010010")) == W("0010001"));
  CHECK(shift_dz(W("0000011")) == W("0000110"));
  CHECK(shift_dz(W("0011011")) == W("0011011"));

  CHECK_THROWS_AS(shift_lz(W("101")), PreconditionError);
  CHECK_THROWS_AS(shift_eo(W("110")), PreconditionError);
  CHECK_THROWS_AS(shift_rz(W("0100101")), PreconditionError);
  CHECK_THROWS_AS(shift_dz(W("0100")), PreconditionError);
}

TEST_CASE("shift operators against brute force") {
  for (Shift op : {Shift::kLeadingZero, Shift::kEndingOne, Shift::kMaxZeroRun, Shift::kDoubleZero}) {
    const auto shape = oracle_shape(op);
    for (int m = 2; m <= 11; ++m) {
      for (const auto& w : all_words(m)) {
        const auto s = w.str();
        REQUIRE(has_shape(op, w) == shape(s));
        if (!shape(s)) continue;
        const BitWord next = shift(op, w);
        REQUIRE(next.str() == oracle::next_rotation(s, shape));
        // Orbit law: the operator cycles through the shaped rotations.
        const int orbit = shift_orbit_length(op, w);
        std::set<std::string> shaped;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const auto r = oracle::rot(s, i);
          if (shape(r)) shaped.insert(r);
        }
        REQUIRE(orbit == static_cast<int>(shaped.size()));
        REQUIRE(shift_power(op, w, static_cast<std::uint64_t>(orbit)) == w);
        for (std::uint64_t k : {0ULL, 1ULL, 2ULL, 5ULL, 59ULL, 1000003ULL}) {
          if (k <= 59) REQUIRE(shift_power(op, w, k).str() == oracle::power(s, shape, k));
          REQUIRE(shift_power(op, w, k) == shift_power(op, w, k % static_cast<std::uint64_t>(orbit)));
        }
      }
    }
  }
}

TEST_CASE("bit strings") {
  const auto s = BitString::parse("0011");
  CHECK(s.size() == 4);
  CHECK(s.str() == "0011");
  CHECK(s.window(3, 2) == W("10"));
  CHECK(s.hex() == "30");
  CHECK(BitString::parse("000000010").hex() == "0100");
  CHECK_THROWS_AS(BitString::parse("012"), ParseError);
  BitString big;
  for (int i = 0; i < 200; ++i) big.push_back(i % 3 == 0);
  for (int i = 0; i < 200; ++i) CHECK(big[static_cast<std::size_t>(i)] == (i % 3 == 0));
}

TEST_CASE("truth tables") {
  const auto t = TruthTable::parse(3, "01101001");
  CHECK(t.arity() == 3);
  CHECK(t[1] == 1);
  CHECK(t.at(W("011")) == 0);
  CHECK(t.weight() == 4);
  CHECK(t.hex() == "69");
  CHECK(TruthTable::parse(3, "69") == t);
  CHECK(TruthTable::parse(3, "0110 1001") == t);
  CHECK(t.binary() == "01101001");
  CHECK_THROWS_AS(TruthTable::parse(3, "0110100"), ParseError);
  CHECK_THROWS_AS(TruthTable::parse(3, "6g"), ParseError);
}
