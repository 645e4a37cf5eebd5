#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supports {

// Thrown when an operation's structural precondition fails (piercing family,
// non-easy decomposition, missing witness edge, ...). Carries a one-line
// machine-parseable witness for the CLI.
class precondition_error : public std::runtime_error {
 public:
  precondition_error(const std::string& what, std::string witness_json)
      : std::runtime_error(what), witness(std::move(witness_json)) {}
  std::string witness;
};

// Undirected simple graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

enum class Color : unsigned char { Red, Blue };

// Total red/blue coloring of a host graph's vertex set.
struct Coloring {
  std::vector<Color> color;

  static Coloring all_blue(int n) { return Coloring{std::vector<Color>(static_cast<size_t>(n), Color::Blue)}; }
  bool is_blue(int v) const { return color[static_cast<size_t>(v)] == Color::Blue; }
  int size() const { return static_cast<int>(color.size()); }
  std::vector<int> blue_vertices() const;
};

enum class FamilyName : unsigned char { H, K };

// Ordered list of vertex sets; identity is positional, duplicates are legal.
struct SubgraphFamily {
  std::vector<std::vector<int>> members;  // each sorted, unique, nonempty
  FamilyName name = FamilyName::H;

  SubgraphFamily() = default;
  SubgraphFamily(std::vector<std::vector<int>> member_sets, FamilyName family_name, int host_vertex_count);

  int size() const { return static_cast<int>(members.size()); }
  const std::vector<int>& member(int i) const { return members[static_cast<size_t>(i)]; }
};

// Host graph + one family; every member must induce a connected subgraph.
struct GraphSystem {
  Graph graph;
  Coloring coloring;
  SubgraphFamily family_h;

  GraphSystem() = default;
  GraphSystem(Graph g, SubgraphFamily h);
  GraphSystem(Graph g, Coloring c, SubgraphFamily h);
};

// Host graph + two families (H and K), all members connected.
struct IntersectionSystem {
  Graph graph;
  SubgraphFamily family_h;
  SubgraphFamily family_k;

  IntersectionSystem() = default;
  IntersectionSystem(Graph g, SubgraphFamily h, SubgraphFamily k);
};

// Construction record attached to every support.
struct Provenance {
  std::string kind;
  // Bounds can be astronomically large (2^76 for intersection supports);
  // powers of two are exact in double, so this stays lossless.
  double width_bound_claimed = -1.0;
  int width_achieved = -1;
  std::optional<std::vector<int>> embedding;  // outer cyclic order of label indices
};

// Support graph over logical labels (blue vertex ids for primal supports,
// member indices for dual and intersection supports). Edges are pairs of
// positions into `labels`.
struct Support {
  std::vector<int> labels;
  std::set<std::pair<int, int>> edges;
  Provenance provenance;

  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  int index_of(int label) const;  // -1 if absent
  int size() const { return static_cast<int>(labels.size()); }
};

// True iff the subgraph of g induced on s is connected; empty s is false.
bool induced_connected(const Graph& g, const std::vector<int>& s);

struct NonPiercingReport {
  bool ok = true;
  int first = -1;   // witness: ordered pair (first, second) with
  int second = -1;  // members[first] \ members[second] disconnected
};

// Checks the non-piercing property of fam on g. The witness, if any, is the
// lexicographically first violating ordered pair of member indices.
NonPiercingReport is_non_piercing(const Graph& g, const SubgraphFamily& fam);

struct MaximalReduction {
  SubgraphFamily family;        // the maximal members, ascending original index
  std::vector<int> kept;        // original index of family.members[i]
  std::map<int, int> successor;  // removed original index -> containing kept index
};

// Maximal elements of the containment order on member vertex sets. Duplicate
// sets keep the lowest-index copy; every removed member maps to the
// lowest-index kept member containing it.
MaximalReduction containment_maximal(const SubgraphFamily& fam);

// Re-attaches removed members as degree-one labels next to their successors.
// Input labels must include every successor.
Support attach_pendants(const Support& support_on_maximal, const std::map<int, int>& successor);

}  // namespace supports
