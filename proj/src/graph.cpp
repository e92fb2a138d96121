#include "debruijn/graph.hpp"

#include <algorithm>
#include <sstream>

#include "debruijn/errors.hpp"

namespace debruijn {

using nlohmann::json;

AdjacencyGraph adjacency_graph(const FeedbackFunction& f, int max_order) {
  const CycleIndex index(f, max_order);
  const int n = f.order();
  AdjacencyGraph g;
  g.n = n;
  g.vertices = index.cycles();
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 0; x < half; ++x) {
    const std::size_t a = index.cycle_id(x);
    const std::size_t b = index.cycle_id(x | half);
    if (a != b) g.edges.push_back({a, b, {BitWord(n, x), BitWord(n, x | half)}});
  }
  return g;
}

CycleOrder cycle_order(const Family& family) {
  if (std::holds_alternative<PcrLzK>(family) || std::holds_alternative<PcrLastLz>(family) ||
      std::holds_alternative<PcrWeightBandsLz>(family) || std::holds_alternative<PcrGLz>(family) ||
      std::holds_alternative<PcrTable>(family)) {
    return CycleOrder::kWeightDescending;
  }
  if (std::holds_alternative<PcrEoK>(family) || std::holds_alternative<PcrFirstEo>(family) ||
      std::holds_alternative<PcrWeightBandsEo>(family) || std::holds_alternative<PcrGEo>(family)) {
    return CycleOrder::kWeightAscending;
  }
  if (std::holds_alternative<Jfb>(family)) return CycleOrder::kRepresentative;
  if (std::holds_alternative<PsrRunK>(family)) return CycleOrder::kRun;
  if (std::holds_alternative<PsrMixedK>(family)) return CycleOrder::kMixed;
  return CycleOrder::kNecklace;
}

std::string order_name(CycleOrder order) {
  switch (order) {
    case CycleOrder::kWeightDescending:
      return "weight-descending";
    case CycleOrder::kWeightAscending:
      return "weight-ascending";
    case CycleOrder::kRun:
      return "run";
    case CycleOrder::kNecklace:
      return "necklace";
    case CycleOrder::kRepresentative:
      return "representative";
    case CycleOrder::kMixed:
      return "mixed";
  }
  return "?";
}

bool precedes(CycleOrder order, const CycleRecord& a, const CycleRecord& b) {
  switch (order) {
    case CycleOrder::kWeightDescending:
      return a.weight > b.weight;
    case CycleOrder::kWeightAscending:
      return a.weight < b.weight;
    case CycleOrder::kRun:
      return max_zero_run(a.necklace) > max_zero_run(b.necklace);
    case CycleOrder::kNecklace:
      return a.necklace < b.necklace;
    case CycleOrder::kRepresentative:
      return a.representative < b.representative;
    case CycleOrder::kMixed:
      return a.weight > b.weight || (a.weight == b.weight && a.necklace < b.necklace);
  }
  return false;
}

std::optional<std::size_t> extreme_cycle(CycleOrder order, const std::vector<CycleRecord>& cycles) {
  if (cycles.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycles.size(); ++i) {
    if (precedes(order, cycles[i], cycles[best])) best = i;
  }
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (j != best && !precedes(order, cycles[best], cycles[j])) return std::nullopt;
  }
  return best;
}

SpanningTree induced_tree(const RuleSpec& spec, int max_order) {
  const CycleIndex index(spec.base(), max_order);
  SpanningTree t;
  t.n = spec.order();
  t.order = cycle_order(spec.family());
  t.vertices = index.cycles();
  const auto& cycles = t.vertices;
  const auto name = [&](std::size_t v) { return cycles[v].necklace.str(); };

  const auto root = extreme_cycle(t.order, cycles);
  if (!root) {
    throw TreeError("no cycle precedes all others under the " + order_name(t.order) + " order", {});
  }
  t.root = *root;

  std::vector<int> outdegree(cycles.size(), 0);
  std::vector<std::size_t> parent(cycles.size(), cycles.size());
  for (const FiredPair& p : fired_pairs(spec, max_order)) {
    const std::size_t a = index.cycle_id(p.low);
    const std::size_t b = index.cycle_id(p.high);
    if (a == b) {
      throw TreeError("fired pair " + p.low.str() + "/" + p.high.str() + " lies inside cycle (" +
                          name(a) + ")",
                      {name(a)});
    }
    SpanningTree::Edge e{};
    if (precedes(t.order, cycles[a], cycles[b])) {
      e = {b, a, p, p.high};
    } else if (precedes(t.order, cycles[b], cycles[a])) {
      e = {a, b, p, p.low};
    } else {
      throw TreeError("fired pair " + p.low.str() + "/" + p.high.str() + " joins cycles (" + name(a) +
                          ") and (" + name(b) + "), incomparable under the " +
                          order_name(t.order) + " order",
                      {name(a), name(b)});
    }
    ++outdegree[e.child];
    parent[e.child] = e.parent;
    t.edges.push_back(e);
  }
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    const int expected = v == t.root ? 0 : 1;
    if (outdegree[v] != expected) {
      throw TreeError("cycle (" + name(v) + ") has outdegree " + std::to_string(outdegree[v]) +
                          ", expected " + std::to_string(expected),
                      {name(v)});
    }
  }
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    std::size_t u = v;
    for (std::size_t steps = 0; u != t.root; ++steps) {
      if (steps > cycles.size()) {
        throw TreeError("cycle (" + name(v) + ") does not reach the root", {name(v)});
      }
      u = parent[u];
    }
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const SpanningTree::Edge& x, const SpanningTree::Edge& y) { return x.child < y.child; });
  return t;
}

namespace {

std::string quoted(const BitWord& w) { return "\"" + w.str() + "\""; }

}  // namespace

std::string to_dot(const AdjacencyGraph& g) {
  std::ostringstream out;
  out << "graph adjacency {\n";
  for (const auto& v : g.vertices) out << "  " << quoted(v.necklace) << ";\n";
  for (const auto& e : g.edges) {
    out << "  " << quoted(g.vertices[e.a].necklace) << " -- " << quoted(g.vertices[e.b].necklace)
        << " [label=" << quoted(e.pair.low) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SpanningTree& t) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    out << "  " << quoted(t.vertices[i].necklace);
    if (i == t.root) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& e : t.edges) {
    out << "  " << quoted(t.vertices[e.child].necklace) << " -> "
        << quoted(t.vertices[e.parent].necklace) << " [label=" << quoted(e.label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

json vertex_json(const CycleRecord& r) {
  return json{{"necklace", r.necklace.str()},
              {"weight", r.weight},
              {"least_period", r.least_period},
              {"states", r.state_count},
              {"representative", r.representative.str()}};
}

}  // namespace

json to_json(const AdjacencyGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(vertex_json(v));
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"a", g.vertices[e.a].necklace.str()},
                     {"b", g.vertices[e.b].necklace.str()},
                     {"pair", {e.pair.low.str(), e.pair.high.str()}}});
  }
  return json{{"n", g.n}, {"vertices", vertices}, {"edges", edges}};
}

json to_json(const SpanningTree& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices) vertices.push_back(vertex_json(v));
  json edges = json::array();
  for (const auto& e : t.edges) {
    edges.push_back({{"child", t.vertices[e.child].necklace.str()},
                     {"parent", t.vertices[e.parent].necklace.str()},
                     {"label", e.label.str()},
                     {"pair", {e.pair.low.str(), e.pair.high.str()}}});
  }
  return json{{"n", t.n},
              {"order", order_name(t.order)},
              {"root", t.vertices[t.root].necklace.str()},
              {"vertices", vertices},
              {"edges", edges}};
}

}  // namespace debruijn
