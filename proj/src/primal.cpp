#include "supports/primal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace supports {

namespace {

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool any_blue(const Coloring& c, const std::vector<int>& s) {
  return std::any_of(s.begin(), s.end(), [&](int v) { return c.is_blue(v); });
}

// blue vertices of member split by the edge (x, parent): returns
// (has blue in G_x, has blue outside G_x)
std::pair<bool, bool> blue_sides(const Coloring& c, const std::vector<int>& member, const SubtreeIndex& idx,
                                 int x) {
  bool inside = false, outside = false;
  for (int v : member) {
    if (!c.is_blue(v)) continue;
    if (idx.vertex_in_gx(v, x))
      inside = true;
    else
      outside = true;
    if (inside && outside) break;
  }
  return {inside, outside};
}

}  // namespace

EasyReport is_easy(const GraphSystem& sys, const TreeDecomposition& td) {
  auto rep = validate(sys.graph, td);
  if (!rep.ok) throw precondition_error("is_easy: invalid decomposition: " + rep.violation, "{}");
  TreeDecomposition rooted = td;
  if (!rooted.root) rooted.root = 0;
  SubtreeIndex idx(rooted);
  for (const auto& a : adhesion_sets(rooted)) {
    if (a.vertices.empty()) continue;
    for (int i = 0; i < sys.family_h.size(); ++i) {
      const auto& member = sys.family_h.member(i);
      auto trace = set_intersect(member, a.vertices);
      if (trace.empty() || any_blue(sys.coloring, trace)) continue;
      auto [inside, outside] = blue_sides(sys.coloring, member, idx, a.edge.first);
      if (inside && outside) return {false, a.vertices, i, a.edge};
    }
  }
  return {};
}

TreeDecomposition make_easy(const GraphSystem& sys, const TreeDecomposition& td) {
  auto rep = validate(sys.graph, td);
  if (!rep.ok) throw precondition_error("make_easy: invalid decomposition: " + rep.violation, "{}");
  TreeDecomposition out = td;
  if (!out.root) out.root = 0;
  SubtreeIndex idx(out);
  auto parent = out.parents();

  auto bag_insert = [&](int node, int v) {
    auto& bag = out.bags[static_cast<size_t>(node)];
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it != bag.end() && *it == v) return;
    bag.insert(it, v);
    idx.note_added(v, node);
  };

  for (int x : post_order(out)) {
    int p = parent[static_cast<size_t>(x)];
    if (p < 0) continue;
    auto adhesion = set_intersect(out.bags[static_cast<size_t>(x)], out.bags[static_cast<size_t>(p)]);
    if (adhesion.empty()) continue;

    // unserved blue-crossing members, grouped by their all-red trace
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int i = 0; i < sys.family_h.size(); ++i) {
      const auto& member = sys.family_h.member(i);
      auto trace = set_intersect(member, adhesion);
      if (trace.empty() || any_blue(sys.coloring, trace)) continue;
      auto [inside, outside] = blue_sides(sys.coloring, member, idx, x);
      if (inside && outside) groups[trace].push_back(i);
    }

    for (const auto& [trace, group] : groups) {
      // distinct restrictions to G_x; the class owner is the lowest member index
      std::map<std::vector<int>, int> classes;
      for (int i : group) {
        std::vector<int> restriction;
        for (int v : sys.family_h.member(i))
          if (idx.vertex_in_gx(v, x)) restriction.push_back(v);
        auto it = classes.find(restriction);
        if (it == classes.end()) classes.emplace(std::move(restriction), i);
      }
      // minimal classes in the containment order; one blue vertex from each
      // serves every member whose restriction contains the class
      std::vector<std::pair<int, const std::vector<int>*>> minimal;  // (owner, set)
      for (const auto& [set_a, owner_a] : classes) {
        bool is_minimal = true;
        for (const auto& [set_b, owner_b] : classes) {
          if (&set_a == &set_b) continue;
          if (set_b.size() < set_a.size() &&
              std::includes(set_a.begin(), set_a.end(), set_b.begin(), set_b.end())) {
            is_minimal = false;
            break;
          }
        }
        if (is_minimal) minimal.push_back({owner_a, &set_a});
      }
      std::sort(minimal.begin(), minimal.end());
      for (auto& [owner, cls] : minimal) {
        const auto& bag_x = out.bags[static_cast<size_t>(x)];
        int chosen = -1;
        for (int v : *cls) {
          if (!sys.coloring.is_blue(v)) continue;
          if (std::binary_search(bag_x.begin(), bag_x.end(), v)) {
            chosen = v;
            break;
          }
        }
        if (chosen < 0) {
          // no blue of the class sits in bag(x): pull the lowest one up the
          // tree path from its shallowest holder to x
          for (int v : *cls) {
            if (sys.coloring.is_blue(v)) {
              chosen = v;
              break;
            }
          }
          if (chosen < 0) continue;  // all-red class cannot help and needs no help
          int at = idx.top_node[static_cast<size_t>(chosen)];
          while (at != x) {
            at = parent[static_cast<size_t>(at)];
            bag_insert(at, chosen);
          }
        }
        bag_insert(p, chosen);
      }
    }
  }
  return out;
}

Support primal_support(const GraphSystem& sys, const TreeDecomposition& easy_td) {
  auto easiness = is_easy(sys, easy_td);
  if (!easiness.easy)
    throw precondition_error("primal_support: decomposition is not easy",
                             "{\"member\":" + std::to_string(easiness.witness_member) + "}");
  Support q;
  q.labels = sys.coloring.blue_vertices();
  std::map<int, int> pos;
  for (int i = 0; i < q.size(); ++i) pos[q.labels[static_cast<size_t>(i)]] = i;
  int widest = 0;
  for (const auto& bag : easy_td.bags) {
    std::vector<int> blue;
    for (int v : bag)
      if (sys.coloring.is_blue(v)) blue.push_back(v);
    widest = std::max(widest, static_cast<int>(blue.size()));
    for (size_t i = 0; i < blue.size(); ++i)
      for (size_t j = i + 1; j < blue.size(); ++j) q.add_edge(pos.at(blue[i]), pos.at(blue[j]));
  }
  q.provenance.kind = "primal";
  q.provenance.width_achieved = widest - 1;
  q.provenance.width_bound_claimed = static_cast<double>(easy_td.width());
  return q;
}

Support build_primal(const GraphSystem& sys, const TreeDecomposition* provided) {
  TreeDecomposition td;
  if (provided) {
    auto rep = validate(sys.graph, *provided);
    if (!rep.ok) throw precondition_error("build_primal: invalid decomposition: " + rep.violation, "{}");
    td = *provided;
  } else {
    td = build_decomposition(sys.graph, sys.graph.n <= 20 ? BuildMode::ExactSmall : BuildMode::MinFillHeuristic);
  }
  const int t = td.width();
  td = binarize_and_root(td);
  auto easy = make_easy(sys, td);
  auto q = primal_support(sys, easy);
  q.provenance.width_bound_claimed = std::ldexp(1.0, t + 2) + t;
  return q;
}

}  // namespace supports
