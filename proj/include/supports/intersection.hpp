#pragma once

#include "supports/dual.hpp"
#include "supports/graph.hpp"
#include "supports/treedecomp.hpp"

namespace supports {

struct KEasyReport {
  bool easy = true;
  int witness_k = -1;
  std::vector<int> witness_adhesion;
  std::pair<int, int> witness_edge{-1, -1};
};

// Marks a vertex blue exactly when it lies in some H and some K; under this
// coloring K-easiness coincides with easiness of the system (G, K).
Coloring phi_coloring(const IntersectionSystem& sys);

KEasyReport is_k_easy(const IntersectionSystem& sys, const TreeDecomposition& td);

// The easiness transform applied to (G, K) under the phi coloring.
TreeDecomposition make_k_easy(const IntersectionSystem& sys, const TreeDecomposition& td);

// K-easy transform, then the dual pipeline for H over the K-easy
// decomposition. Labels are the H member indices.
Support intersection_support(const IntersectionSystem& sys, const TreeDecomposition& td);

Support build_intersection(const IntersectionSystem& sys, const TreeDecomposition* provided = nullptr);

}  // namespace supports
