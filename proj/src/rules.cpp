#include "debruijn/rules.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int parity(const BitWord& w) noexcept { return weight(w) & 1; }

/// c_1 ... c_{n-1} as a word; callers guarantee n >= 2.
BitWord suffix(const BitWord& c) { return c.drop_front(); }

bool is_pcr_family(const Family& f) {
  return std::holds_alternative<PcrLzK>(f) || std::holds_alternative<PcrEoK>(f) ||
         std::holds_alternative<PcrLastLz>(f) || std::holds_alternative<PcrFirstEo>(f) ||
         std::holds_alternative<PcrWeightBandsLz>(f) ||
         std::holds_alternative<PcrWeightBandsEo>(f) || std::holds_alternative<PcrGLz>(f) ||
         std::holds_alternative<PcrGEo>(f) || std::holds_alternative<PcrTable>(f);
}

// True iff `s` is the least n-stage state on its f-cycle. Walks the cycle.
bool is_cycle_representative(const FeedbackFunction& f, const BitWord& s) {
  const int n = f.order();
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t start = s.value();
  std::uint64_t x = start;
  while (true) {
    x = ((x << 1) & mask) | static_cast<std::uint64_t>(f.evaluate_packed(x));
    if (x == start) return true;
    if (x < start) return false;
  }
}

int band_index(const std::vector<int>& ks, int z) {
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i] <= z && z < ks[i + 1]) return static_cast<int>(i);
  }
  return -1;
}

bool has_cyclic_double_zero(const BitWord& w) {
  const BitWord zeros = complement(w);
  return (zeros.value() & rotate_left(zeros, 1).value()) != 0;
}

void check_bands(int n, const std::vector<int>& ks, std::vector<std::string>& out) {
  if (ks.size() < 2) {
    out.push_back("ks needs at least two entries (1 and n+1)");
    return;
  }
  if (static_cast<int>(ks.size()) > n) {
    out.push_back("ks has " + std::to_string(ks.size()) + " entries; at most n = " +
                  std::to_string(n) + " are allowed");
  }
  if (ks.front() != 1) out.push_back("ks must start with 1");
  if (ks.back() != n + 1) out.push_back("ks must end with n+1 = " + std::to_string(n + 1));
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] <= ks[i - 1]) {
      out.push_back("ks must be strictly ascending");
      break;
    }
  }
  if (ks[ks.size() - 2] >= n) {
    out.push_back("second-to-last entry of ks must be < n (got " + std::to_string(ks[ks.size() - 2]) +
                  ")");
  }
}

void check_g(int n, const std::vector<int>& g, std::vector<std::string>& out) {
  if (static_cast<int>(g.size()) != n) {
    out.push_back("g needs one entry per argument 1..n (" + std::to_string(n) + "), got " +
                  std::to_string(g.size()));
    return;
  }
  for (int w = 1; w <= n; ++w) {
    const int v = g[static_cast<std::size_t>(w - 1)];
    if (v < 0 || v >= w) {
      out.push_back("g(" + std::to_string(w) + ") = " + std::to_string(v) + " outside 0.." +
                    std::to_string(w - 1));
    }
  }
}

void check_table(TableKind kind, int n, const std::vector<BitWord>& choice,
                 std::vector<std::string>& out) {
  const int len = kind == TableKind::kPcr ? n : n + 1;
  std::set<BitWord> seen_cycles;
  for (const BitWord& s : choice) {
    if (s.size() != len) {
      out.push_back("chosen state " + s.str() + " must have " + std::to_string(len) + " bits");
      continue;
    }
    const BitWord neck = least_rotation(s);
    if (!seen_cycles.insert(neck).second) {
      out.push_back("cycle (" + neck.str() + ") has more than one chosen state");
      continue;
    }
    const auto allowed = admissible_choices(kind, neck);
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      out.push_back("chosen state " + s.str() + " is not admissible in cycle (" + neck.str() +
                    ")");
    }
  }
  if (kind == TableKind::kPsrEo) {
    for (const BitWord& s : choice) {
      if (s.size() == len && (weight(s) & 1) != 0) {
        out.push_back("chosen state " + s.str() + " has odd weight; it lies on no PSR cycle");
      }
    }
  }
  const std::uint64_t expected =
      (kind == TableKind::kPcr ? pcr_cycle_count(n) : psr_cycle_count(n)) - 1;
  if (seen_cycles.size() != expected) {
    out.push_back("table covers " + std::to_string(seen_cycles.size()) + " cycles; expected " +
                  std::to_string(expected));
  }
}

}  // namespace

std::vector<std::string> validate(int n, const Family& family) {
  std::vector<std::string> out;
  if (n < 2 || n > kMaxRuleOrder) {
    out.push_back("order n = " + std::to_string(n) + " outside 2.." + std::to_string(kMaxRuleOrder));
    return out;
  }
  std::visit(Overloaded{
                 [&](const PcrWeightBandsLz& r) { check_bands(n, r.ks, out); },
                 [&](const PcrWeightBandsEo& r) { check_bands(n, r.ks, out); },
                 [&](const PcrGLz& r) { check_g(n, r.g, out); },
                 [&](const PcrGEo& r) { check_g(n, r.g, out); },
                 [&](const PcrTable& r) {
                   if (n > 57) {
                     out.push_back("table rules need n <= 57");
                     return;
                   }
                   check_table(TableKind::kPcr, n, r.choice, out);
                 },
                 [&](const PsrEoTable& r) {
                   if (n > 56) {
                     out.push_back("table rules need n <= 56");
                     return;
                   }
                   check_table(TableKind::kPsrEo, n, r.choice, out);
                 },
                 [&](const PsrEoK& r) {
                   if (r.k < 1) out.push_back("psr-eo-k needs k >= 1");
                 },
                 [&](const Jfb& r) {
                   if (r.f.order() != n) {
                     out.push_back("feedback function has order " + std::to_string(r.f.order()) +
                                   ", rule has order " + std::to_string(n));
                   }
                 },
                 [](const auto&) {},
             },
             family);
  return out;
}

std::string family_name(const Family& family) {
  return std::visit(Overloaded{
                        [](const PcrLzK&) { return std::string("pcr-lz-k"); },
                        [](const PcrEoK&) { return std::string("pcr-eo-k"); },
                        [](const PcrLastLz&) { return std::string("pcr-last-lz"); },
                        [](const PcrFirstEo&) { return std::string("pcr-first-eo"); },
                        [](const PcrWeightBandsLz&) { return std::string("pcr-bands-lz"); },
                        [](const PcrWeightBandsEo&) { return std::string("pcr-bands-eo"); },
                        [](const PcrGLz&) { return std::string("pcr-g-lz"); },
                        [](const PcrGEo&) { return std::string("pcr-g-eo"); },
                        [](const PcrTable&) { return std::string("pcr-table"); },
                        [](const Jfb&) { return std::string("jfb"); },
                        [](const PsrRunK&) { return std::string("psr-run-k"); },
                        [](const PsrEoK&) { return std::string("psr-eo-k"); },
                        [](const PsrIndexS&) { return std::string("psr-index-s"); },
                        [](const PsrIndexT&) { return std::string("psr-index-t"); },
                        [](const PsrEoTable&) { return std::string("psr-eo-table"); },
                        [](const PsrMixedK&) { return std::string("psr-mixed-k"); },
                    },
                    family);
}

namespace {

FeedbackFunction base_register(int n, const Family& family) {
  if (const auto* j = std::get_if<Jfb>(&family)) return j->f;
  return is_pcr_family(family) ? FeedbackFunction::pcr(n) : FeedbackFunction::psr(n);
}

std::shared_ptr<const std::unordered_set<std::uint64_t>> chosen_set(const Family& family) {
  const std::vector<BitWord>* choice = nullptr;
  if (const auto* t = std::get_if<PcrTable>(&family)) choice = &t->choice;
  if (const auto* t = std::get_if<PsrEoTable>(&family)) choice = &t->choice;
  if (choice == nullptr) return nullptr;
  auto set = std::make_shared<std::unordered_set<std::uint64_t>>();
  for (const BitWord& s : *choice) set->insert(s.value());
  return set;
}

}  // namespace

RuleSpec::RuleSpec(int n, Family family)
    : n_(n), family_(std::move(family)), base_(FeedbackFunction::pcr(2)) {
  auto problems = validate(n_, family_);
  if (!problems.empty()) throw SpecError(std::move(problems));
  base_ = base_register(n_, family_);
  chosen_ = chosen_set(family_);
}

BitWord leading_zero_word(const BitWord& c) { return c.with_bit(0, 0); }

BitWord ending_one_word(const BitWord& c) { return suffix(c).push_back(1); }

BitWord psr_run_word(const BitWord& c) {
  const BitWord x = suffix(c);
  return x.push_back(parity(x) ^ 1).push_back(1);
}

BitWord psr_eo_word(const BitWord& c) {
  const BitWord x = suffix(c);
  return x.push_front(parity(x) ^ 1).push_back(1);
}

bool RuleSpec::fires(const BitWord& state) const {
  if (state.size() != n_) {
    throw PreconditionError("state of length " + std::to_string(state.size()) + " for a rule of order " +
                            std::to_string(n_));
  }
  return fires_unchecked(state);
}

int RuleSpec::next_bit(const BitWord& state) const {
  return base_.evaluate(state) ^ static_cast<int>(fires(state));
}

int RuleSpec::next_bit_packed(std::uint64_t state) const {
  const BitWord c(n_, state);
  return base_.evaluate_packed(state) ^ static_cast<int>(fires_unchecked(c));
}

bool RuleSpec::fires_unchecked(const BitWord& c) const {
  const int n = n_;
  return std::visit(
      Overloaded{
          [&](const PcrLzK& r) {
            return is_necklace(shift_power(Shift::kLeadingZero, leading_zero_word(c), r.k));
          },
          [&](const PcrEoK& r) {
            return is_necklace(shift_power(Shift::kEndingOne, ending_one_word(c), r.k));
          },
          [&](const PcrLastLz&) {
            const BitWord v = leading_zero_word(c);
            int j = 0;
            for (int i = n - 1; i >= 1; --i) {
              if (c[i] == 0) {
                j = i;
                break;
              }
            }
            return is_necklace(rotate_left(v, j));
          },
          [&](const PcrFirstEo&) {
            const BitWord u = ending_one_word(c);
            int j = 0;
            for (int i = 1; i < n; ++i) {
              if (c[i] == 1) {
                j = i;
                break;
              }
            }
            return is_necklace(rotate_left(u, j));
          },
          [&](const PcrWeightBandsLz& r) {
            const BitWord v = leading_zero_word(c);
            const int i = band_index(r.ks, n - weight(v));
            return i >= 0 && is_necklace(shift_power(
                                 Shift::kLeadingZero, v,
                                 static_cast<std::uint64_t>(r.ks[static_cast<std::size_t>(i)] - 1)));
          },
          [&](const PcrWeightBandsEo& r) {
            const BitWord u = ending_one_word(c);
            const int i = band_index(r.ks, weight(u));
            return i >= 0 && is_necklace(shift_power(
                                 Shift::kEndingOne, u,
                                 static_cast<std::uint64_t>(r.ks[static_cast<std::size_t>(i)] - 1)));
          },
          [&](const PcrGLz& r) {
            const BitWord v = leading_zero_word(c);
            const int z = n - weight(v);
            return is_necklace(shift_power(Shift::kLeadingZero, v,
                                           static_cast<std::uint64_t>(r.g[static_cast<std::size_t>(z - 1)])));
          },
          [&](const PcrGEo& r) {
            const BitWord u = ending_one_word(c);
            return is_necklace(shift_power(
                Shift::kEndingOne, u,
                static_cast<std::uint64_t>(r.g[static_cast<std::size_t>(weight(u) - 1)])));
          },
          [&](const PcrTable&) { return chosen_->contains(leading_zero_word(c).value()); },
          [&](const Jfb& r) {
            const BitWord x = suffix(c);
            if (x.value() == 0) {
              // s_i,0..0 -> 0..0,s_i+1
              return (c[0] ^ 1) != r.f.evaluate_packed(c.value());
            }
            return is_cycle_representative(r.f, x.push_back(0)) ||
                   is_cycle_representative(r.f, x.push_back(1));
          },
          [&](const PsrRunK& r) {
            const BitWord w = psr_run_word(c);
            return has_shape(Shift::kMaxZeroRun, w) &&
                   is_necklace(shift_power(Shift::kMaxZeroRun, w, r.k));
          },
          [&](const PsrEoK& r) {
            const BitWord w = psr_eo_word(c);
            const BitWord x = shift_power(Shift::kEndingOne, w, r.k);
            return x != w ? is_necklace(x) : is_necklace(shift(Shift::kEndingOne, w));
          },
          [&](const PsrIndexS&) {
            const BitWord w = psr_eo_word(c);
            int s = -1;
            for (int i = n - 1; i >= 0; --i) {
              if (w[i] == 1) {
                s = i;
                break;
              }
            }
            return is_necklace(rotate_left(w, s + 1));
          },
          [&](const PsrIndexT&) {
            const BitWord w = psr_eo_word(c);
            int t = n - 1;
            for (int i = 0; i < n; ++i) {
              if (w[i] == 1) {
                t = i;
                break;
              }
            }
            return is_necklace(rotate_left(w, t + 1));
          },
          [&](const PsrEoTable&) { return chosen_->contains(psr_eo_word(c).value()); },
          [&](const PsrMixedK& r) {
            const BitWord x = suffix(c);
            const int s = parity(x);
            const BitWord cycle_word = x.push_front(0).push_back(s);
            if (has_cyclic_double_zero(cycle_word)) {
              return s == 0 && is_necklace(shift_power(Shift::kDoubleZero, x.push_front(0).push_front(0), r.k));
            }
            if (x.value() == BitWord::ones(n - 1).value()) return false;  // C = (0,1,...,1)
            int j = 1;
            while (c[j] != 0) ++j;
            return is_necklace(rotate_left(cycle_word, j));
          },
      },
      family_);
}

std::vector<BitWord> admissible_choices(TableKind kind, const BitWord& necklace) {
  const int p = least_period(necklace);
  std::vector<BitWord> rotations;
  for (int i = 0; i < p; ++i) rotations.push_back(rotate_left(necklace, i));
  std::vector<BitWord> out;
  if (kind == TableKind::kPcr) {
    for (const BitWord& r : rotations) {
      if (r.front() == 0) out.push_back(r);
    }
    return out;
  }
  std::vector<BitWord> eo;
  for (const BitWord& r : rotations) {
    if (r.back() == 1) eo.push_back(r);
  }
  if (eo.size() == 1) return eo;
  for (const BitWord& r : eo) {
    if (r != necklace) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<std::vector<BitWord>> choice_lists(TableKind kind, int n) {
  std::vector<std::vector<BitWord>> lists;
  const auto f = kind == TableKind::kPcr ? FeedbackFunction::pcr(n) : FeedbackFunction::psr(n);
  for (const CycleRecord& r : decompose(f)) {
    auto choices = admissible_choices(kind, r.necklace);
    if (!choices.empty()) lists.push_back(std::move(choices));
  }
  return lists;
}

}  // namespace

std::uint64_t table_choice_count(TableKind kind, int n) {
  std::uint64_t product = 1;
  for (const auto& list : choice_lists(kind, n)) {
    if (product > UINT64_MAX / list.size()) return UINT64_MAX;
    product *= list.size();
  }
  return product;
}

void enumerate_table_choices(TableKind kind, int n, std::uint64_t budget,
                             const std::function<void(const RuleSpec&)>& visit) {
  const auto lists = choice_lists(kind, n);
  std::uint64_t product = 1;
  for (const auto& list : lists) {
    product = product > UINT64_MAX / list.size() ? UINT64_MAX : product * list.size();
  }
  if (product > budget) {
    throw BudgetError("table enumeration of " + std::to_string(product) +
                          " rules exceeds the budget of " + std::to_string(budget),
                      product, budget);
  }
  // Mixed-radix counter over the per-cycle choice lists.
  std::vector<std::size_t> digit(lists.size(), 0);
  std::vector<BitWord> choice(lists.size());
  for (std::uint64_t count = 0; count < product; ++count) {
    for (std::size_t i = 0; i < lists.size(); ++i) choice[i] = lists[i][digit[i]];
    if (kind == TableKind::kPcr) {
      visit(RuleSpec(n, PcrTable{choice}));
    } else {
      visit(RuleSpec(n, PsrEoTable{choice}));
    }
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (++digit[i] < lists[i].size()) break;
      digit[i] = 0;
    }
  }
}

}  // namespace debruijn
