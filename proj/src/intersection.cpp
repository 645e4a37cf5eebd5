#include "supports/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supports/primal.hpp"

namespace supports {

Coloring phi_coloring(const IntersectionSystem& sys) {
  std::vector<char> in_h(static_cast<size_t>(sys.graph.n), 0), in_k(static_cast<size_t>(sys.graph.n), 0);
  for (int i = 0; i < sys.family_h.size(); ++i)
    for (int v : sys.family_h.member(i)) in_h[static_cast<size_t>(v)] = 1;
  for (int i = 0; i < sys.family_k.size(); ++i)
    for (int v : sys.family_k.member(i)) in_k[static_cast<size_t>(v)] = 1;
  Coloring out;
  out.color.assign(static_cast<size_t>(sys.graph.n), Color::Red);
  for (int v = 0; v < sys.graph.n; ++v)
    if (in_h[static_cast<size_t>(v)] && in_k[static_cast<size_t>(v)])
      out.color[static_cast<size_t>(v)] = Color::Blue;
  return out;
}

namespace {

GraphSystem phi_system(const IntersectionSystem& sys) {
  return GraphSystem(sys.graph, phi_coloring(sys), sys.family_k);
}

}  // namespace

KEasyReport is_k_easy(const IntersectionSystem& sys, const TreeDecomposition& td) {
  auto rep = is_easy(phi_system(sys), td);
  if (rep.easy) return {};
  return {false, rep.witness_member, rep.witness_adhesion, rep.witness_edge};
}

TreeDecomposition make_k_easy(const IntersectionSystem& sys, const TreeDecomposition& td) {
  return make_easy(phi_system(sys), td);
}

Support intersection_support(const IntersectionSystem& sys, const TreeDecomposition& td) {
  auto rep = validate(sys.graph, td);
  if (!rep.ok)
    throw precondition_error("intersection_support: invalid decomposition: " + rep.violation, "{}");
  const int t = td.width();
  auto rooted = binarize_and_root(td);
  auto keasy = make_k_easy(sys, rooted);
  const int t_easy = keasy.width();
  Graph cc = chordal_complete(sys.graph, keasy);
  const double sparse_bound =
      4 * (t_easy + 1) > 1020 ? std::numeric_limits<double>::infinity() : std::ldexp(1.0, 4 * (t_easy + 1));
  auto core = dual_pipeline_core(cc, sys.family_h, keasy, sparse_bound);
  Support q = std::move(core.support);
  q.provenance.kind = "intersection";
  // bound 2^(2^(t+4) + 4(t+1)); past double range report infinity
  long long exponent =
      t + 4 < 60 ? (1LL << (t + 4)) + 4LL * (t + 1) : std::numeric_limits<long long>::max();
  q.provenance.width_bound_claimed = exponent > 1020 ? std::numeric_limits<double>::infinity()
                                                     : std::ldexp(1.0, static_cast<int>(exponent));
  return q;
}

Support build_intersection(const IntersectionSystem& sys, const TreeDecomposition* provided) {
  TreeDecomposition td;
  if (provided) {
    td = *provided;
  } else {
    td = build_decomposition(sys.graph,
                             sys.graph.n <= 20 ? BuildMode::ExactSmall : BuildMode::MinFillHeuristic);
  }
  return intersection_support(sys, td);
}

}  // namespace supports
