#pragma once

#include <array>

#include "supports/graph.hpp"

namespace supports {

// Cycle 0..n-1 clockwise with two families of vertex subsets (arbitrary
// subsets; single runs are not required).
struct CycleSystem {
  int n = 0;
  std::vector<std::vector<int>> family_h;
  std::vector<std::vector<int>> family_k;

  CycleSystem() = default;
  CycleSystem(int cycle_length, std::vector<std::vector<int>> h, std::vector<std::vector<int>> k);
};

// |arc[i,j]| walking clockwise, endpoints included.
int arc_size(int n, int i, int j);
// vertices of arc[i,j] clockwise.
std::vector<int> arc_vertices(int n, int i, int j);
// v strictly inside arc(i,j)?
bool arc_strictly_contains(int n, int i, int j, int v);

struct Run {
  int start = 0;
  int end = 0;  // inclusive, clockwise
};

struct RunDecomposition {
  int member = -1;
  std::vector<Run> runs;                      // clockwise, from the lowest-id run start
  std::vector<std::pair<int, int>> chords;    // d_i = {t_i, s_{i+1}}
  std::vector<int> chord_lengths;             // |arc[t_i, s_{i+1}]|
  std::optional<int> min_chord;               // argmin, lowest index on ties
  int run_count() const { return static_cast<int>(runs.size()); }
};

RunDecomposition run_decompose(int n, const std::vector<int>& member_vertices, int member_index = -1);
RunDecomposition run_decompose(const CycleSystem& cs, int member);

struct AxaxReport {
  bool free_ = true;
  int first = -1, second = -1;       // member pair
  std::array<int, 4> pattern{-1, -1, -1, -1};  // witnessing vertices in cyclic order
};

// axax: a1,a2 in H\H' and x1,x2 in H' alternating on the cycle.
AxaxReport classify_axax(int n, const std::vector<std::vector<int>>& fam);
// abab: both alternating pairs outside the other member.
AxaxReport classify_abab(int n, const std::vector<std::vector<int>>& fam);

struct StrongAxaxReport {
  enum class Clause : unsigned char { None, HAxax, KAxax, Intersection };
  bool free_ = true;
  Clause failed = Clause::None;
  int h = -1, k = -1;  // member indices of the failing clause
  std::array<int, 4> pattern{-1, -1, -1, -1};
};

// Both families axax-free, and every alternating disjoint (H, K) pair refutes
// the intersection property.
StrongAxaxReport classify_strong_axax(const CycleSystem& cs);

struct CycleReduction {
  std::optional<CycleSystem> reduced;  // nullopt when fewer than 3 vertices survive
  std::vector<int> kept;               // old vertex ids, ascending
  std::vector<int> vertex_map;         // old -> new, -1 removed
  std::vector<int> h_map, k_map;       // old member -> new index, -1 dropped (empty)
};

// Removes every vertex outside union(H) intersect union(K), splicing the cycle.
CycleReduction reduce(const CycleSystem& cs);

struct StrictReduction {
  std::vector<int> kept;
  std::map<int, int> successor;  // removed member -> strictly containing kept member
};

// Maximal members in the strict-containment order (weak containments stay).
StrictReduction strict_containment_maximal(int n, const std::vector<std::vector<int>>& fam);

// Member indices in lex. cyclic order (by run start clockwise from 0, then by
// run length, then by index). Members must be single runs.
std::vector<int> lex_cycle(int n, const std::vector<std::vector<int>>& fam);

// All members of both families single runs, H strict-containment free: the
// lex cycle C(H) is an outerplanar support.
Support single_run_support(const CycleSystem& cs);

// H single runs (strict-containment free), K arbitrary, system axax-free:
// recursion on N(C,K) splitting at minimum K-chords.
Support support_multi_run_k(const CycleSystem& cs);

// The general construction; refuses systems that are not strong axax-free.
Support outerplanar_intersection_support(const CycleSystem& cs);

// K = singletons; needs (C,H) axax-free.
Support outerplanar_dual_support(int n, const std::vector<std::vector<int>>& family_h);

// Primal route through the intersection construction: H = singleton blue
// vertices, K = the family. Labels are blue vertex ids.
Support outerplanar_primal_support(int n, const std::vector<std::vector<int>>& family,
                                   const Coloring& coloring);

// Cyclic order of all vertices on the outer face of an outerplanar embedding
// (blocks spliced at cut vertices); throws when g admits none.
std::vector<int> outer_cycle_order(const Graph& g);

// Restrict an intersection system on an outerplanar host to its outer cycle.
CycleSystem project_to_cycle(const Graph& g, const SubgraphFamily& h, const SubgraphFamily& k);

}  // namespace supports
