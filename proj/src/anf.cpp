#include "debruijn/anf.hpp"

#include <algorithm>
#include <bit>

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

// Table index bit for variable x_j of an m-ary function (x_0 is the MSB).
std::uint64_t var_bit(int m, int j) { return std::uint64_t{1} << (m - 1 - j); }

std::vector<int> variables(std::uint32_t mask) {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if ((mask >> j) & 1U) out.push_back(j);
  }
  return out;
}

bool monomial_less(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return b == 0 && a != 0;
  return variables(a) < variables(b);
}

}  // namespace

AnfPolynomial::AnfPolynomial(int arity, std::vector<std::uint32_t> monomials)
    : arity_(arity), monomials_(std::move(monomials)) {
  if (arity < 0 || arity > TruthTable::kMaxArity) {
    throw PreconditionError("ANF arity " + std::to_string(arity) + " out of range");
  }
  for (std::uint32_t m : monomials_) {
    if (arity < 32 && (m >> arity) != 0) throw PreconditionError("monomial uses a variable beyond the arity");
  }
  std::sort(monomials_.begin(), monomials_.end(), monomial_less);
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
    throw PreconditionError("duplicate monomial");
  }
}

int AnfPolynomial::degree() const noexcept {
  int d = 0;
  for (std::uint32_t m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

int AnfPolynomial::evaluate(const BitWord& x) const {
  if (x.size() != arity_) throw PreconditionError("input length does not match the ANF arity");
  std::uint32_t ones = 0;
  for (int j = 0; j < arity_; ++j) ones |= static_cast<std::uint32_t>(x[j]) << j;
  int out = 0;
  for (std::uint32_t m : monomials_) out ^= static_cast<int>((m & ones) == m);
  return out;
}

TruthTable AnfPolynomial::to_table() const {
  TruthTable t(arity_);
  for (std::uint32_t m : monomials_) {
    std::uint64_t index = 0;
    for (int j : variables(m)) index |= var_bit(arity_, j);
    t.flip(index);
  }
  // The inverse of the Moebius transform is the transform itself.
  const std::uint64_t size = t.size();
  for (std::uint64_t step = 1; step < size; step <<= 1) {
    for (std::uint64_t i = 0; i < size; ++i) {
      if (i & step && t[i ^ step]) t.flip(i);
    }
  }
  return t;
}

std::string AnfPolynomial::str() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (std::uint32_t m : monomials_) {
    if (!out.empty()) out += " ⊕ ";
    if (m == 0) {
      out += "1";
      continue;
    }
    for (int j : variables(m)) out += "x" + std::to_string(j);
  }
  return out;
}

AnfPolynomial to_anf(const TruthTable& t) {
  TruthTable c = t;
  const int m = t.arity();
  const std::uint64_t size = c.size();
  for (std::uint64_t step = 1; step < size; step <<= 1) {
    for (std::uint64_t i = 0; i < size; ++i) {
      if (i & step && c[i ^ step]) c.flip(i);
    }
  }
  std::vector<std::uint32_t> monomials;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (!c[i]) continue;
    std::uint32_t mask = 0;
    for (int j = 0; j < m; ++j) {
      if (i & var_bit(m, j)) mask |= std::uint32_t{1} << j;
    }
    monomials.push_back(mask);
  }
  return AnfPolynomial(m, std::move(monomials));
}

TruthTable h_from_pairs(const std::vector<BitWord>& fired, int n) {
  if (n < 2 || n > TruthTable::kMaxArity + 1) {
    throw PreconditionError("h_from_pairs needs 2 <= n <= " + std::to_string(TruthTable::kMaxArity + 1));
  }
  std::vector<std::uint64_t> states;
  for (const BitWord& v : fired) {
    if (v.size() != n) throw PreconditionError("fired state " + v.str() + " is not of order " + std::to_string(n));
    states.push_back(v.value());
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  TruthTable h(n - 1);
  for (std::uint64_t s : states) {
    if (!std::binary_search(states.begin(), states.end(), s ^ half)) {
      throw PreconditionError("fired set is not closed under conjugation at " + BitWord(n, s).str());
    }
    // One term per pair: its 0-prefixed member.
    if (s < half) h.flip(s);
  }
  return h;
}

TruthTable h_from_pairs(const std::vector<FiredPair>& pairs, int n) {
  std::vector<BitWord> fired;
  for (const FiredPair& p : pairs) {
    fired.push_back(p.low);
    fired.push_back(p.high);
  }
  return h_from_pairs(fired, n);
}

TruthTable necklace_indicator(int n) {
  if (n < 1 || n > TruthTable::kMaxArity) throw PreconditionError("necklace_indicator order out of range");
  TruthTable t(n);
  for (std::uint64_t index = 0; index < t.size(); ++index) {
    const BitWord x(n, index);
    const auto at = [&](int i) { return x[i % n]; };
    int product = 1;
    for (int i = 1; i < n && product; ++i) {
      // f_i: x_0..x_{j-1} agree with the rotation and x_j < x_{i+j}, summed
      // over j, plus the term for full agreement.
      int f = 0;
      int equal_prefix = 1;
      for (int j = 0; j < n; ++j) {
        f ^= equal_prefix & (at(j) ^ 1) & at(i + j);
        equal_prefix &= (at(j) ^ at(i + j)) ^ 1;
      }
      f ^= equal_prefix;
      product &= f;
    }
    t.set(index, product);
  }
  return t;
}

TruthTable rule_feedback(const RuleSpec& spec) {
  const int n = spec.order();
  if (n > TruthTable::kMaxArity) throw PreconditionError("rule_feedback order out of range");
  const TruthTable h = h_from_pairs(fired_pairs(spec), n);
  TruthTable f = spec.base().tabulate();
  const std::uint64_t mask = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (h[x & mask]) f.flip(x);
  }
  return f;
}

}  // namespace debruijn
