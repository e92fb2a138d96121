#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "debruijn/fsr.hpp"
#include "debruijn/generator.hpp"
#include "debruijn/rules.hpp"
#include "json.hpp"

namespace debruijn {

/// Undirected multigraph of the cycles of f: one edge per conjugate pair
/// whose two states lie on different cycles.
struct AdjacencyGraph {
  struct Edge {
    std::size_t a;  ///< cycle of pair.low
    std::size_t b;  ///< cycle of pair.high
    FiredPair pair;
  };
  int n = 0;
  std::vector<CycleRecord> vertices;  ///< sorted by necklace
  std::vector<Edge> edges;
};

AdjacencyGraph adjacency_graph(const FeedbackFunction& f, int max_order = 24);

/// Transitive relations on cycles used to orient fired pairs.
enum class CycleOrder {
  kWeightDescending,  ///< heavier cycles come first; root (1)
  kWeightAscending,   ///< lighter cycles come first; root (0)
  kRun,               ///< longer maximal zero run first; root (0)
  kNecklace,          ///< lexicographically smaller necklace first
  kRepresentative,    ///< smaller least state first
  kMixed,             ///< heavier first, ties broken by smaller necklace
};

/// The order certifying the family's tree.
CycleOrder cycle_order(const Family& family);
std::string order_name(CycleOrder order);

/// True iff `a` strictly precedes `b`. Weight and run orders are partial.
bool precedes(CycleOrder order, const CycleRecord& a, const CycleRecord& b);

/// Rooted tree on the cycles of the rule's base register. Every non-root
/// cycle has exactly one edge, leading towards the root.
struct SpanningTree {
  struct Edge {
    std::size_t child;
    std::size_t parent;
    FiredPair pair;
    BitWord label;  ///< the member of the pair lying on the child cycle
  };
  int n = 0;
  CycleOrder order = CycleOrder::kNecklace;
  std::vector<CycleRecord> vertices;  ///< sorted by necklace
  std::size_t root = 0;
  std::vector<Edge> edges;            ///< sorted by child
};

/// Orients each fired pair from the later cycle to the earlier one under the
/// family's order. Throws TreeError naming the offending cycles if a pair
/// lies inside one cycle, joins incomparable cycles, or the result is not a
/// tree rooted at the order's least cycle.
SpanningTree induced_tree(const RuleSpec& spec, int max_order = 24);

/// The cycle preceding every other cycle under `order`, if there is one.
std::optional<std::size_t> extreme_cycle(CycleOrder order, const std::vector<CycleRecord>& cycles);

std::string to_dot(const AdjacencyGraph& g);
std::string to_dot(const SpanningTree& t);

nlohmann::json to_json(const AdjacencyGraph& g);
nlohmann::json to_json(const SpanningTree& t);

}  // namespace debruijn
