#pragma once

#include "supports/graph.hpp"
#include "supports/treedecomp.hpp"

namespace supports {

struct EasyReport {
  bool easy = true;
  std::vector<int> witness_adhesion;       // the adhesion set that failed
  int witness_member = -1;                 // member with an all-red trace there
  std::pair<int, int> witness_edge{-1, -1};  // (child, parent)
};

// Easy tree decomposition test: every member whose blue vertices sit on both
// sides of a tree edge must meet that edge's adhesion set in a blue vertex.
// Members with blue vertices on one side only never route through the
// adhesion, so they are exempt (the standing assumption of the construction).
EasyReport is_easy(const GraphSystem& sys, const TreeDecomposition& td);

// Bottom-up augmentation: at each tree edge, every blue-crossing member with
// an all-red adhesion trace is served by adding one blue vertex per distinct
// minimal restriction class to the parent bag. Output passes is_easy.
TreeDecomposition make_easy(const GraphSystem& sys, const TreeDecomposition& td);

// Projects the easy decomposition to blue vertices, making each projected bag
// a clique. Refuses when easy_td is not easy.
Support primal_support(const GraphSystem& sys, const TreeDecomposition& easy_td);

// Full pipeline: decompose (when none is given), binarize, make easy, project.
Support build_primal(const GraphSystem& sys, const TreeDecomposition* provided = nullptr);

}  // namespace supports
