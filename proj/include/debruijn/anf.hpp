#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/generator.hpp"
#include "debruijn/rules.hpp"
#include "debruijn/truth_table.hpp"

namespace debruijn {

/// XOR of monomials over variables x_0..x_{m-1}. Bit j of a monomial mask
/// selects x_j; the empty mask is the constant 1.
class AnfPolynomial {
 public:
  AnfPolynomial() = default;
  AnfPolynomial(int arity, std::vector<std::uint32_t> monomials);

  int arity() const noexcept { return arity_; }
  /// Sorted by variable list, constant last; no duplicates.
  const std::vector<std::uint32_t>& monomials() const noexcept { return monomials_; }
  int degree() const noexcept;

  int evaluate(const BitWord& x) const;
  TruthTable to_table() const;

  /// "x0 ⊕ x1x3 ⊕ 1"; "0" for the zero polynomial.
  std::string str() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  int arity_ = 0;
  std::vector<std::uint32_t> monomials_;
};

/// Algebraic normal form by the binary Moebius transform.
AnfPolynomial to_anf(const TruthTable& t);

/// h(x_1..x_{n-1}) = sum over one state v per fired pair of
/// prod_i (x_i + not v_i). `fired` must be closed under conjugation.
TruthTable h_from_pairs(const std::vector<BitWord>& fired, int n);
TruthTable h_from_pairs(const std::vector<FiredPair>& pairs, int n);

/// [x is a necklace], evaluated through the product over i = 1..n-1 of the
/// lexicographic comparison chains between x and its i-th rotation.
TruthTable necklace_indicator(int n);

/// Feedback table of the rule: base feedback plus h of the fired pairs.
/// A nonsingular function whose only cycle is the rule's de Bruijn sequence.
TruthTable rule_feedback(const RuleSpec& spec);

}  // namespace debruijn
