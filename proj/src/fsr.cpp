#include "debruijn/fsr.hpp"

#include <algorithm>
#include <numeric>

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

void check_order(int n, int max) {
  if (n < 1 || n > max) {
    throw PreconditionError("register order " + std::to_string(n) + " outside 1.." +
                            std::to_string(max));
  }
}

std::uint64_t next_state(const FeedbackFunction& f, std::uint64_t s, std::uint64_t mask) noexcept {
  return ((s << 1) & mask) | static_cast<std::uint64_t>(f.evaluate_packed(s));
}

CycleRecord make_record(const FeedbackFunction& f, std::uint64_t least_state, std::uint64_t length,
                        int ones) {
  const int n = f.order();
  CycleRecord r;
  r.representative = BitWord(n, least_state);
  r.state_count = length;
  switch (f.kind()) {
    case RegisterKind::kPcr:
      r.necklace = r.representative;
      r.weight = weight(r.necklace);
      r.least_period = least_period(r.necklace);
      break;
    case RegisterKind::kPsr:
    case RegisterKind::kCsr: {
      const BitWord window = r.representative.push_back(f.evaluate_packed(least_state));
      r.necklace = least_rotation(window);
      r.weight = weight(window);
      r.least_period = least_period(window);
      break;
    }
    case RegisterKind::kTable:
      r.necklace = r.representative;
      r.weight = ones;
      r.least_period = static_cast<int>(length);
      break;
  }
  return r;
}

}  // namespace

FeedbackFunction FeedbackFunction::pcr(int n) {
  check_order(n, kMaxOrder);
  return FeedbackFunction(n, RegisterKind::kPcr);
}

FeedbackFunction FeedbackFunction::psr(int n) {
  check_order(n, kMaxOrder);
  return FeedbackFunction(n, RegisterKind::kPsr);
}

FeedbackFunction FeedbackFunction::csr(int n) {
  check_order(n, kMaxOrder);
  return FeedbackFunction(n, RegisterKind::kCsr);
}

FeedbackFunction FeedbackFunction::table(TruthTable t) {
  const int n = t.arity();
  check_order(n, TruthTable::kMaxArity);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t suffix = 0; suffix < half; ++suffix) {
    if (t[suffix] == t[suffix | half]) {
      throw PreconditionError("feedback table is singular at suffix " +
                              BitWord(n - 1 > 0 ? n - 1 : 1, suffix).str());
    }
  }
  FeedbackFunction f(n, RegisterKind::kTable);
  f.table_ = std::make_shared<const TruthTable>(std::move(t));
  return f;
}

std::string FeedbackFunction::name() const {
  switch (kind_) {
    case RegisterKind::kPcr:
      return "pcr";
    case RegisterKind::kPsr:
      return "psr";
    case RegisterKind::kCsr:
      return "csr";
    case RegisterKind::kTable:
      return "table";
  }
  return "?";
}

const TruthTable& FeedbackFunction::truth_table() const {
  if (!table_) throw PreconditionError("feedback function " + name() + " has no explicit table");
  return *table_;
}

int FeedbackFunction::evaluate(const BitWord& state) const {
  if (state.size() != n_) {
    throw PreconditionError("state of length " + std::to_string(state.size()) +
                            " for a register of order " + std::to_string(n_));
  }
  return evaluate_packed(state.value());
}

BitWord FeedbackFunction::step(const BitWord& state) const {
  const int bit = evaluate(state);
  if (n_ == 1) return BitWord(1, static_cast<std::uint64_t>(bit));
  return state.drop_front().push_back(bit);
}

TruthTable FeedbackFunction::tabulate() const {
  if (kind_ == RegisterKind::kTable) return *table_;
  check_order(n_, TruthTable::kMaxArity);
  TruthTable t(n_);
  for (std::uint64_t s = 0; s < t.size(); ++s) t.set(s, evaluate_packed(s));
  return t;
}

void check_sweep_budget(int n, int max_order) {
  if (n > max_order) {
    throw BudgetError("a sweep over 2^" + std::to_string(n) + " states exceeds the order cap " +
                          std::to_string(max_order),
                      n >= 64 ? UINT64_MAX : std::uint64_t{1} << n,
                      max_order >= 64 ? UINT64_MAX : std::uint64_t{1} << max_order);
  }
}

void for_each_cycle(const FeedbackFunction& f,
                    const std::function<void(const CycleRecord&, std::uint64_t)>& visit,
                    int max_order) {
  const int n = f.order();
  check_sweep_budget(n, max_order);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t mask = total - 1;
  std::vector<std::uint64_t> visited(static_cast<std::size_t>((total + 63) / 64), 0);
  for (std::uint64_t start = 0; start < total; ++start) {
    if ((visited[start / 64] >> (start % 64)) & 1U) continue;
    std::uint64_t s = start;
    std::uint64_t length = 0;
    std::uint64_t least = start;
    int ones = 0;
    do {
      visited[s / 64] |= std::uint64_t{1} << (s % 64);
      least = std::min(least, s);
      ones += static_cast<int>((s >> (n - 1)) & 1U);
      s = next_state(f, s, mask);
      ++length;
    } while (s != start);
    visit(make_record(f, least, length, ones), start);
  }
}

std::vector<CycleRecord> decompose(const FeedbackFunction& f, int max_order) {
  std::vector<CycleRecord> cycles;
  for_each_cycle(
      f, [&](const CycleRecord& r, std::uint64_t) { cycles.push_back(r); }, max_order);
  std::sort(cycles.begin(), cycles.end(),
            [](const CycleRecord& a, const CycleRecord& b) { return a.necklace < b.necklace; });
  return cycles;
}

CycleRecord cycle_of(const FeedbackFunction& f, const BitWord& state) {
  const int n = f.order();
  if (state.size() != n) throw PreconditionError("state length does not match the register order");
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t start = state.value();
  std::uint64_t s = start;
  std::uint64_t length = 0;
  std::uint64_t least = start;
  int ones = 0;
  do {
    least = std::min(least, s);
    ones += static_cast<int>((s >> (n - 1)) & 1U);
    s = next_state(f, s, mask);
    ++length;
  } while (s != start);
  return make_record(f, least, length, ones);
}

CycleIndex::CycleIndex(const FeedbackFunction& f, int max_order) {
  const int n = f.order();
  check_sweep_budget(n, max_order);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t mask = total - 1;
  id_.assign(static_cast<std::size_t>(total), UINT32_MAX);
  std::vector<CycleRecord> found;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (id_[start] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(found.size());
    std::uint64_t s = start;
    std::uint64_t length = 0;
    int ones = 0;
    do {
      id_[s] = id;
      ones += static_cast<int>((s >> (n - 1)) & 1U);
      s = next_state(f, s, mask);
      ++length;
    } while (s != start);
    // The first state met in increasing order is the least one on the cycle.
    found.push_back(make_record(f, start, length, ones));
  }
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return found[a].necklace < found[b].necklace;
  });
  std::vector<std::uint32_t> rank(found.size());
  cycles_.reserve(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    cycles_.push_back(found[order[i]]);
  }
  for (auto& id : id_) id = rank[id];
}

std::size_t CycleIndex::find(const BitWord& necklace) const {
  const auto it = std::lower_bound(
      cycles_.begin(), cycles_.end(), necklace,
      [](const CycleRecord& r, const BitWord& key) { return r.necklace < key; });
  if (it == cycles_.end() || it->necklace != necklace) {
    throw PreconditionError("no cycle with necklace " + necklace.str());
  }
  return static_cast<std::size_t>(it - cycles_.begin());
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t pcr_cycle_count(int n) {
  check_order(n, 57);
  unsigned __int128 sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      sum += static_cast<unsigned __int128>(euler_phi(static_cast<std::uint64_t>(d))) << (n / d);
    }
  }
  return static_cast<std::uint64_t>(sum / static_cast<unsigned>(n));
}

std::uint64_t psr_cycle_count(int n) {
  if (n < 2 || n > 56) {
    throw PreconditionError("psr_cycle_count needs 2 <= n <= 56, got " + std::to_string(n));
  }
  const std::uint64_t z = pcr_cycle_count(n + 1);
  if (n % 2 == 0) return z / 2;
  // n + 1 = 2^t n' with n' odd
  int t = 0;
  int odd = n + 1;
  while (odd % 2 == 0) {
    odd /= 2;
    ++t;
  }
  unsigned __int128 sum = 0;
  for (int d = 1; d <= odd; ++d) {
    if (odd % d == 0) {
      sum += static_cast<unsigned __int128>(euler_phi(static_cast<std::uint64_t>(odd / d)))
             << (d << t);
    }
  }
  return z - static_cast<std::uint64_t>(sum / static_cast<unsigned>(2 * (n + 1)));
}

BitWord extend_psr_state(const BitWord& c) { return c.push_back(weight(c) & 1); }

}  // namespace debruijn
