#include "debruijn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "debruijn/anf.hpp"
#include "debruijn/census.hpp"
#include "debruijn/errors.hpp"
#include "debruijn/generator.hpp"
#include "debruijn/graph.hpp"
#include "debruijn/rule_json.hpp"

namespace debruijn {

using nlohmann::json;

std::vector<int> parse_order_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    int v = 0;
    std::size_t used = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad order range \"" + text + "\"");
    return v;
  };
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw ParseError("bad order range \"" + text + "\"");
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

BenchPoint bench_stream(const RuleSpec& spec, std::uint64_t bits, int repeats) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    SequenceStream stream(spec);
    int sink = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < bits; ++i) sink ^= stream.next();
    const auto t1 = std::chrono::steady_clock::now();
    // Keeps the loop from being optimized away.
    volatile int keep = sink;
    (void)keep;
    best = std::min(best, std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  return {spec.order(), bits, bits == 0 ? 0.0 : best / static_cast<double>(bits)};
}

GrowthFit fit_growth(const std::vector<BenchPoint>& points) {
  std::vector<int> orders;
  for (const auto& p : points) orders.push_back(p.n);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  if (orders.size() < 3) throw PreconditionError("a growth fit needs at least three orders");

  // Centered and scaled n keeps the normal equations well conditioned.
  const double lo = orders.front();
  const double hi = orders.back();
  const double mid = (lo + hi) / 2;
  const double half = (hi - lo) / 2;
  Eigen::MatrixXd a(points.size(), 3);
  Eigen::VectorXd y(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double u = (points[i].n - mid) / half;
    a(i, 0) = 1;
    a(i, 1) = u;
    a(i, 2) = u * u;
    y(i) = points[i].ns_per_bit;
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(y);

  GrowthFit fit;
  fit.curvature = c(2) / (half * half);
  fit.slope = c(1) / half - 2 * mid * fit.curvature;
  fit.intercept = c(0) - c(1) * mid / half + fit.curvature * mid * mid;
  const double at_max = c(0) + c(1) + c(2);
  const double span = hi - lo;
  fit.superlinear =
      at_max > 0 ? std::max(fit.curvature, 0.0) * span * span / at_max : 0.0;
  return fit;
}

namespace {

/// Rule selection shared by the subcommands.
struct RuleOptions {
  std::string spec_path;
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> k;
  std::vector<int> ks;
  std::vector<int> g;
  std::vector<std::string> choice;
  std::string fsr;
  std::string table;
};

void add_rule_options(CLI::App* cmd, RuleOptions& o, bool with_order = true) {
  cmd->add_option("--spec", o.spec_path, "rule spec JSON file");
  cmd->add_option("--family", o.family, "rule family");
  if (with_order) cmd->add_option("--n", o.n, "order")->check(CLI::Range(1, kMaxRuleOrder));
  cmd->add_option("--k", o.k, "shift parameter");
  cmd->add_option("--ks", o.ks, "weight band starts, comma separated")->delimiter(',');
  cmd->add_option("--g", o.g, "g(1),...,g(n), comma separated")->delimiter(',');
  cmd->add_option("--choice", o.choice, "chosen states, comma separated")->delimiter(',');
  cmd->add_option("--fsr", o.fsr, "jfb register: pcr, psr, csr or table");
  cmd->add_option("--table", o.table, "jfb truth table (binary or hex)");
}

json inline_params(const RuleOptions& o) {
  json p = json::object();
  if (o.k) p["k"] = *o.k;
  if (!o.ks.empty()) p["ks"] = o.ks;
  if (!o.g.empty()) p["g"] = o.g;
  if (!o.choice.empty()) p["choice"] = o.choice;
  if (!o.fsr.empty()) p["fsr"] = o.fsr;
  if (!o.table.empty()) p["table"] = o.table;
  return p;
}

RuleSpec rule_at(const RuleOptions& o, int n) {
  if (o.family.empty()) throw SpecError({"no rule given; use --family or --spec"});
  return RuleSpec(n, family_from_json(n, o.family, inline_params(o)));
}

RuleSpec resolve_rule(const RuleOptions& o) {
  if (!o.spec_path.empty()) {
    if (!o.family.empty()) throw SpecError({"--spec and --family are exclusive"});
    std::ifstream file(o.spec_path);
    if (!file) throw SpecError({"cannot read " + o.spec_path});
    json j;
    try {
      j = json::parse(file);
    } catch (const json::exception& e) {
      throw SpecError({o.spec_path + ": " + e.what()});
    }
    return rule_from_json(j);
  }
  if (o.n == 0) throw SpecError({"--n is required"});
  return rule_at(o, o.n);
}

enum class Format { kBits, kHex, kDot, kJson };

struct FormatFlags {
  bool hex = false;
  bool dot = false;
  bool json = false;

  Format pick(Format fallback) const {
    if (json) return Format::kJson;
    if (dot) return Format::kDot;
    if (hex) return Format::kHex;
    return fallback;
  }
};

std::uint64_t budget_from_env() {
  const char* env = std::getenv("DEBRUIJN_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultCensusBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw ParseError(std::string("bad DEBRUIJN_BUDGET \"") + env + "\"");
  return v;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string strip_space(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

/// First position whose window repeats an earlier one, if any.
std::optional<std::pair<std::uint64_t, std::uint64_t>> first_repeat(const BitString& bits, int n) {
  const std::uint64_t len = bits.size();
  std::vector<std::uint64_t> first(std::size_t{1} << n, UINT64_MAX);
  for (std::uint64_t i = 0; i < len; ++i) {
    const std::uint64_t w = bits.window(i, n).value();
    if (first[w] != UINT64_MAX) return std::pair{first[w], i};
    first[w] = i;
  }
  return std::nullopt;
}

int cmd_gen(const RuleOptions& ro, std::optional<std::uint64_t> bits, const std::string& start,
            const FormatFlags& ff, std::ostream& out) {
  const RuleSpec spec = resolve_rule(ro);
  const int n = spec.order();
  const BitWord s = start.empty() ? BitWord::zeros(n) : BitWord::parse(start);
  if (s.size() != n) throw SpecError({"--start must have n bits"});
  const Format format = ff.pick(Format::kBits);

  if (!bits) {
    const GeneratedSequence seq = generate(spec, s);
    if (format == Format::kJson) {
      out << json{{"spec", to_json(spec)}, {"start", s.str()}, {"sequence", seq.bits.str()}}.dump()
          << '\n';
    } else {
      out << (format == Format::kHex ? seq.bits.hex() : seq.bits.str()) << '\n';
    }
    return kExitOk;
  }

  SequenceStream stream(spec, s);
  if (format == Format::kBits) {
    std::string chunk;
    chunk.reserve(1 << 16);
    for (std::uint64_t i = 0; i < *bits; ++i) {
      chunk.push_back(static_cast<char>('0' + stream.next()));
      if (chunk.size() == chunk.capacity()) {
        out << chunk;
        chunk.clear();
      }
    }
    out << chunk << '\n';
    return kExitOk;
  }
  BitString prefix;
  prefix.reserve(*bits);
  for (std::uint64_t i = 0; i < *bits; ++i) prefix.push_back(stream.next());
  if (format == Format::kJson) {
    out << json{{"spec", to_json(spec)}, {"start", s.str()}, {"bits", prefix.str()}}.dump() << '\n';
  } else {
    out << prefix.hex() << '\n';
  }
  return kExitOk;
}

int cmd_verify(int n, const std::string& path, std::istream& in, std::ostream& out) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read " + path);
    text = read_all(file);
  }
  const BitString bits = BitString::parse(strip_space(text));
  if (n > kMaxMaterializedOrder) throw PreconditionError("order too large to verify");
  if (verify_de_bruijn(bits, n)) {
    out << "ok: de Bruijn sequence of order " << n << '\n';
    return kExitOk;
  }
  const std::uint64_t expect = std::uint64_t{1} << n;
  if (bits.size() != expect) {
    out << "fail: length " << bits.size() << ", expected " << expect << '\n';
  } else if (const auto rep = first_repeat(bits, n)) {
    out << "fail: window " << bits.window(rep->second, n).str() << " at " << rep->second
        << " repeats position " << rep->first << '\n';
  } else {
    out << "fail: not a de Bruijn sequence\n";
  }
  return kExitVerifyFailed;
}

int cmd_tree(const RuleOptions& ro, const FormatFlags& ff, std::ostream& out) {
  const SpanningTree tree = induced_tree(resolve_rule(ro));
  if (ff.pick(Format::kDot) == Format::kJson) {
    out << to_json(tree).dump(2) << '\n';
  } else {
    out << to_dot(tree);
  }
  return kExitOk;
}

int cmd_graph(const RuleOptions& ro, const FormatFlags& ff, std::ostream& out) {
  std::optional<FeedbackFunction> f;
  if (ro.spec_path.empty() && ro.family.empty()) {
    if (ro.n == 0) throw SpecError({"--n is required"});
    const std::string kind = ro.fsr.empty() ? "pcr" : ro.fsr;
    if (kind == "pcr") {
      f = FeedbackFunction::pcr(ro.n);
    } else if (kind == "psr") {
      f = FeedbackFunction::psr(ro.n);
    } else if (kind == "csr") {
      f = FeedbackFunction::csr(ro.n);
    } else if (kind == "table") {
      f = FeedbackFunction::table(TruthTable::parse(ro.n, ro.table));
    } else {
      throw SpecError({"unknown fsr kind \"" + kind + "\""});
    }
  } else {
    f = resolve_rule(ro).base();
  }
  const AdjacencyGraph g = adjacency_graph(*f);
  if (ff.pick(Format::kDot) == Format::kJson) {
    out << to_json(g).dump(2) << '\n';
  } else {
    out << to_dot(g);
  }
  return kExitOk;
}

int cmd_anf(const RuleOptions& ro, bool check, const FormatFlags& ff, std::ostream& out) {
  const RuleSpec spec = resolve_rule(ro);
  const int n = spec.order();
  const TruthTable h = h_from_pairs(fired_pairs(spec), n);
  const TruthTable f = rule_feedback(spec);
  const AnfPolynomial h_anf = to_anf(h);
  const AnfPolynomial f_anf = to_anf(f);

  std::optional<bool> round_trip;
  if (check) {
    const GeneratedSequence from_table = generate(FeedbackFunction::table(f_anf.to_table()),
                                                  BitWord::zeros(n));
    round_trip = from_table.bits.str() == canonical_form(spec);
  }

  if (ff.pick(Format::kBits) == Format::kJson) {
    json j{{"spec", to_json(spec)},
           {"h", h_anf.str()},
           {"h_weight", h.weight()},
           {"f", f_anf.str()},
           {"f_table", f.hex()}};
    if (round_trip) j["round_trip"] = *round_trip;
    out << j.dump(2) << '\n';
  } else {
    out << "h = " << h_anf.str() << '\n' << "f = " << f_anf.str() << '\n';
    if (round_trip) out << "round trip " << (*round_trip ? "ok" : "FAILED") << '\n';
  }
  return round_trip.value_or(true) ? kExitOk : kExitVerifyFailed;
}

int cmd_census(const std::string& family, const std::string& orders,
               std::optional<std::uint64_t> budget_flag, unsigned threads, const FormatFlags& ff,
               std::ostream& out) {
  const std::uint64_t budget = budget_flag ? *budget_flag : budget_from_env();
  if (resolve_family_name(family).empty() && family != "pcr-g") {
    throw SpecError({"unknown rule family \"" + family + "\""});
  }
  const std::string name = family == "pcr-g" ? family : resolve_family_name(family);
  const bool as_json = ff.pick(Format::kBits) == Format::kJson;
  int status = kExitOk;
  json reports = json::array();
  for (const int n : parse_order_range(orders)) {
    try {
      const CensusReport r = run_census(name, n, budget, threads);
      if (!r.all_de_bruijn || r.match() == std::optional<bool>(false)) status = kExitVerifyFailed;
      if (as_json) {
        reports.push_back(r.to_json());
      } else {
        out << r.text() << '\n';
      }
    } catch (const BudgetError& e) {
      const auto expected = expected_count(name, n);
      if (as_json) {
        json j{{"family", name},        {"n", n},
               {"refused", true},       {"predicted", e.predicted()},
               {"budget", e.budget()},  {"expected", nullptr}};
        if (expected) {
          j["expected"] = expected->value;
          j["formula"] = expected->formula;
        }
        reports.push_back(j);
      } else {
        out << "family        " << name << "\nn             " << n
            << "\nrefused       " << e.predicted() << " rules exceed the budget of "
            << e.budget() << '\n';
        if (expected) {
          out << "expected      " << expected->value << " = " << expected->formula << '\n';
        }
        out << '\n';
      }
      if (status == kExitOk) status = kExitBudget;
    }
  }
  if (as_json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return status;
}

int cmd_bench(RuleOptions ro, const std::string& orders, std::uint64_t bits, int repeats,
              const FormatFlags& ff, std::ostream& out) {
  if (ro.family.empty()) throw SpecError({"bench needs --family"});
  // Families with a shift parameter default to their smallest k.
  if (!ro.k) {
    const std::string name = resolve_family_name(ro.family);
    if (name == "psr-eo-k") {
      ro.k = 1;
    } else if (name.size() > 2 && name.compare(name.size() - 2, 2, "-k") == 0) {
      ro.k = 0;
    }
  }
  const std::vector<int> ns = parse_order_range(orders);
  std::vector<RuleSpec> specs;
  for (const int n : ns) specs.push_back(rule_at(ro, n));

  std::vector<BenchPoint> points;
  for (const RuleSpec& spec : specs) points.push_back(bench_stream(spec, bits, repeats));
  std::optional<GrowthFit> fit;
  if (ns.size() >= 3) fit = fit_growth(points);

  if (ff.pick(Format::kBits) == Format::kJson) {
    json rows = json::array();
    for (const auto& p : points) rows.push_back({{"n", p.n}, {"bits", p.bits}, {"ns_per_bit", p.ns_per_bit}});
    json j{{"family", specs.front().name()}, {"points", rows}};
    if (fit) {
      j["fit"] = {{"intercept", fit->intercept},
                  {"slope", fit->slope},
                  {"curvature", fit->curvature},
                  {"superlinear", fit->superlinear}};
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << specs.front().name() << ", " << bits << " bits per order\n";
  out << std::setw(4) << "n" << std::setw(12) << "ns/bit" << '\n';
  for (const auto& p : points) {
    out << std::setw(4) << p.n << std::setw(12) << std::fixed << std::setprecision(2)
        << p.ns_per_bit << '\n';
  }
  if (fit) {
    out << std::setprecision(4) << "fit: " << fit->intercept << " + " << fit->slope << " n + "
        << fit->curvature << " n^2, superlinear share " << fit->superlinear << '\n';
  }
  out.unsetf(std::ios::floatfield);
  return kExitOk;
}

void print_error(std::ostream& err, const std::string& what) { err << "error: " << what << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generate, verify and count de Bruijn sequences built by successor rules.",
               "debruijn"};
  app.require_subcommand(1);

  RuleOptions ro;
  FormatFlags ff;
  std::string out_path;
  auto add_common = [&](CLI::App* cmd, bool hex, bool dot, bool as_json) {
    cmd->add_option("--out", out_path, "write the result to this file");
    if (hex) cmd->add_flag("--hex", ff.hex, "hexadecimal output");
    if (dot) cmd->add_flag("--dot", ff.dot, "Graphviz DOT output (default)");
    if (as_json) cmd->add_flag("--json", ff.json, "JSON output");
  };

  std::optional<std::uint64_t> gen_bits;
  std::string start;
  auto* gen = app.add_subcommand("gen", "print the sequence of a rule");
  add_rule_options(gen, ro);
  gen->add_option("--bits", gen_bits, "stream only the first B bits");
  gen->add_option("--start", start, "start state (default 0^n)");
  add_common(gen, true, false, true);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check that a sequence is de Bruijn");
  verify->add_option("--n", ro.n, "order")->required()->check(CLI::Range(1, kMaxMaterializedOrder));
  verify->add_option("file", verify_path, "sequence file (default stdin)");
  verify->add_option("--out", out_path, "write the verdict to this file");

  auto* tree = app.add_subcommand("tree", "spanning tree of cycles joined by a rule");
  add_rule_options(tree, ro);
  add_common(tree, false, true, true);

  auto* graph = app.add_subcommand("graph", "adjacency graph of a register's cycles");
  add_rule_options(graph, ro);
  add_common(graph, false, true, true);

  bool check = false;
  auto* anf = app.add_subcommand("anf", "algebraic normal form of a rule's feedback");
  add_rule_options(anf, ro);
  anf->add_flag("--check", check, "regenerate the sequence from the ANF and compare");
  add_common(anf, false, false, true);

  std::string census_family;
  std::string orders;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  auto* census = app.add_subcommand("census", "count distinct sequences of a family");
  census->add_option("--family", census_family, "rule family, or pcr-g for both g families")
      ->required();
  census->add_option("--n", orders, "order or range a..b")->required();
  census->add_option("--budget", budget, "largest parameter set to enumerate");
  census->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_common(census, false, false, true);

  std::uint64_t bench_bits = 1'000'000;
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "per-bit streaming cost across orders");
  add_rule_options(bench, ro, false);
  bench->add_option("--n", orders, "order or range a..b")->required();
  bench->add_option("--bits", bench_bits, "bits streamed per order");
  bench->add_option("--repeats", repeats, "timed runs per order; the fastest counts");
  add_common(bench, false, false, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      print_error(err, "cannot write " + out_path);
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*gen) return cmd_gen(ro, gen_bits, start, ff, sink);
    if (*verify) return cmd_verify(ro.n, verify_path, in, sink);
    if (*tree) return cmd_tree(ro, ff, sink);
    if (*graph) return cmd_graph(ro, ff, sink);
    if (*anf) return cmd_anf(ro, check, ff, sink);
    if (*census) return cmd_census(census_family, orders, budget, threads, ff, sink);
    return cmd_bench(ro, orders, bench_bits, repeats, ff, sink);
  } catch (const SpecError& e) {
    for (const auto& d : e.diagnostics()) print_error(err, d);
    return kExitUsage;
  } catch (const BudgetError& e) {
    print_error(err, e.what());
    return kExitBudget;
  } catch (const ClosureError& e) {
    print_error(err, e.what());
    return kExitVerifyFailed;
  } catch (const TreeError& e) {
    print_error(err, e.what());
    for (const auto& c : e.cycles()) err << "  cycle " << c << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    print_error(err, e.what());
    return kExitUsage;
  }
}

}  // namespace debruijn
