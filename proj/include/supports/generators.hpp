#pragma once

#include "supports/graph.hpp"
#include "supports/treedecomp.hpp"

namespace supports {

enum class LbKind : unsigned char { PrimalLb, DualLb };

// Worst-case instance forcing exponential support treewidth. Labels of the
// forced grid are blue vertex ids (primal) or member indices (dual);
// grid_coordinates records each label's (row, col) in the forced N x N grid.
struct LowerBoundInstance {
  GraphSystem system;
  LbKind kind = LbKind::PrimalLb;
  int m = 0;
  int n_param = 0;  // floor(m/2)
  int grid_n = 0;   // N = C(n_param, floor(n_param/2))
  std::map<int, std::pair<int, int>> grid_coordinates;
};

LowerBoundInstance gen_primal_lb(int m);
LowerBoundInstance gen_dual_lb(int m);

struct CliqueSystemParams {
  int width = 2;  // t: bags have width+1 vertices
  int bag_count = 12;
  int member_count = 20;
  int k_member_count = 0;  // for intersection instances
  double blue_fraction = 1.0;
  unsigned long long seed = 0;
};

struct CliqueInstance {
  GraphSystem system;
  TreeDecomposition host_decomposition;  // the bags the host was built from
};

struct CliqueIntersectionInstance {
  IntersectionSystem system;
  TreeDecomposition host_decomposition;
};

// Random width-t chordal host (tree of (t+1)-bags with <= t overlaps); members
// are random sub-cliques of bags, hence non-piercing.
CliqueInstance gen_clique_system(const CliqueSystemParams& p);
CliqueIntersectionInstance gen_clique_intersection(const CliqueSystemParams& p);

struct OuterplanarParams {
  int n = 12;
  int h_count = 6;
  int k_count = 6;
  unsigned long long seed = 0;
  int retry_budget = 1000;
};

struct OuterplanarInstance {
  IntersectionSystem system;
  bool retry_exhausted = false;
};

// Random maximal outerplanar host (triangulated n-cycle); members grown as
// boundary arcs, rejected until the family stays non-piercing.
OuterplanarInstance gen_outerplanar_system(const OuterplanarParams& p);

}  // namespace supports
