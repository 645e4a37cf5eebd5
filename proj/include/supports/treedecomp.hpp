#pragma once

#include "supports/graph.hpp"

namespace supports {

// Rooted (optionally) tree of bags. Node ids are dense 0..node_count()-1.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;        // node id -> sorted vertex set
  std::vector<std::pair<int, int>> tree_edges;
  std::optional<int> root;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
  std::vector<std::vector<int>> node_adjacency() const;
  // parent[x], children[x] for the rooted tree; children sorted ascending.
  std::vector<int> parents() const;
  std::vector<std::vector<int>> children() const;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // empty when ok; first failed property otherwise
};

// Checks tree-ness, edge coverage, and per-vertex bag connectivity.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

// Same graph, same width, every node with at most two children. Chain nodes
// duplicate the parent bag verbatim.
TreeDecomposition binarize_and_root(const TreeDecomposition& td, std::optional<int> root_choice = {});

// CC(G): g plus all missing intra-bag edges.
Graph chordal_complete(const Graph& g, const TreeDecomposition& td);

enum class BuildMode { ExactSmall, MinFillHeuristic };

// ExactSmall runs the elimination-order DP (width == tw(g)), limited to
// exact_limit vertices. MinFillHeuristic uses greedy minimum fill-in.
TreeDecomposition build_decomposition(const Graph& g, BuildMode mode, int exact_limit = 20);

struct Restriction {
  TreeDecomposition td;       // decomposition of G_x, dense re-indexed nodes
  std::vector<int> vertices;  // union of the subtree bags
  std::vector<int> node_map;  // old node id -> new id, -1 outside the subtree
};

Restriction restrict(const TreeDecomposition& td, int x);

struct AdhesionSet {
  std::pair<int, int> edge;   // (child, parent)
  std::vector<int> vertices;  // bag(child) intersect bag(parent), sorted
};

// Adhesion sets of a rooted decomposition in post-order of the child node.
std::vector<AdhesionSet> adhesion_sets(const TreeDecomposition& td);

// Post-order listing of nodes from the root (children visited ascending).
std::vector<int> post_order(const TreeDecomposition& td);

// O(1)-ish membership test "vertex v lies in G_x" (the union of bags in the
// subtree at x): v is in G_x iff its shallowest holder node is inside the
// subtree or v sits in bag(x) itself. Stays valid while bags only grow if
// note_added() is called for each insertion.
struct SubtreeIndex {
  std::vector<int> tin, tout;   // Euler intervals per node
  std::vector<int> top_node;    // per vertex: shallowest node whose bag holds it
  std::vector<int> depth;
  const TreeDecomposition* td = nullptr;

  explicit SubtreeIndex(const TreeDecomposition& decomposition);
  bool in_subtree(int node, int ancestor) const {
    return tin[static_cast<size_t>(ancestor)] <= tin[static_cast<size_t>(node)] &&
           tin[static_cast<size_t>(node)] < tout[static_cast<size_t>(ancestor)];  // tout is exclusive
  }
  bool vertex_in_gx(int v, int x) const;
  void note_added(int v, int node);
};

}  // namespace supports
