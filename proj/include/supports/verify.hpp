#pragma once

#include "supports/generators.hpp"
#include "supports/graph.hpp"

namespace supports {

enum class SupportKind : unsigned char { Primal, Dual, Intersection };

struct SupportCheck {
  bool ok = true;
  int hyperedge = -1;                        // violating hyperedge id (member index or vertex/K index)
  std::vector<std::vector<int>> components;  // label values of the disconnected pieces
};

// Brute-force support validity: every hyperedge of the chosen hypergraph must
// induce a connected subgraph of q. Primal hyperedges are the blue traces
// b(H); dual hyperedges are the membership sets H_v; intersection hyperedges
// are the sets H_K.
SupportCheck check_support(SupportKind kind, const GraphSystem& sys, const Support& q);
SupportCheck check_support(const IntersectionSystem& sys, const Support& q);

// Exact treewidth via memoized recursion over vertex subsets. Independent of
// the elimination-order construction in build_decomposition.
int exact_treewidth(const Graph& g, int limit = 20);

// No K4 minor and no K2,3 minor. K4 via series-parallel reduction, K2,3 via
// three internally disjoint u-v paths of length >= 2.
bool is_outerplanar(const Graph& g);

// Edges every valid support of the instance must contain, from definition-level
// reasoning only: 2-element blue traces (primal), exactly-two-membership
// vertices (dual). Pairs are label values.
std::set<std::pair<int, int>> forced_edges(const LowerBoundInstance& lb);

// With an embedding recorded: all edges must be cycle-consecutive or pairwise
// noncrossing chords of the embedding order. Without one: true.
bool embedding_consistent(const Support& q);

}  // namespace supports
