#include "supports/dual.hpp"

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

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SparsityReport sparsity(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td) {
  auto rep = validate(g, td);
  if (!rep.ok) throw precondition_error("sparsity: invalid decomposition: " + rep.violation, "{}");
  SparsityReport out;
  for (int x = 0; x < td.node_count(); ++x) {
    int count = 0;
    for (int i = 0; i < fam.size(); ++i)
      if (!set_intersect(fam.member(i), td.bags[static_cast<size_t>(x)]).empty()) ++count;
    if (count > out.k) {
      out.k = count;
      out.worst_bag = x;
    }
  }
  return out;
}

Support k_sds(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td) {
  auto rep = validate(g, td);
  if (!rep.ok) throw precondition_error("k_sds: invalid decomposition: " + rep.violation, "{}");
  for (int i = 0; i < fam.size(); ++i)
    if (!induced_connected(g, fam.member(i)))
      throw precondition_error("k_sds: disconnected member",
                               "{\"member\":" + std::to_string(i) + "}");
  Support q;
  q.labels.resize(static_cast<size_t>(fam.size()));
  for (int i = 0; i < fam.size(); ++i) q.labels[static_cast<size_t>(i)] = i;
  int widest = 0;
  for (const auto& bag : td.bags) {
    std::vector<int> in_bag;
    for (int i = 0; i < fam.size(); ++i)
      if (!set_intersect(fam.member(i), bag).empty()) in_bag.push_back(i);
    widest = std::max(widest, static_cast<int>(in_bag.size()));
    for (size_t a = 0; a < in_bag.size(); ++a)
      for (size_t b = a + 1; b < in_bag.size(); ++b) q.add_edge(in_bag[a], in_bag[b]);
  }
  q.provenance.kind = "dual";
  q.provenance.width_achieved = widest - 1;
  q.provenance.width_bound_claimed = static_cast<double>(sparsity(g, fam, td).k);
  return q;
}

PushLedger push_sparsify(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td) {
  auto rep = validate(g, td);
  if (!rep.ok) throw precondition_error("push_sparsify: invalid decomposition: " + rep.violation, "{}");
  TreeDecomposition rooted = td;
  if (!rooted.root) rooted.root = 0;
  SubtreeIndex idx(rooted);

  PushLedger ledger;
  ledger.push_counts.assign(static_cast<size_t>(fam.size()), 0);
  std::vector<std::vector<int>> current(fam.members.begin(), fam.members.end());

  for (const auto& a : adhesion_sets(rooted)) {
    if (a.vertices.empty()) continue;
    const int x = a.edge.first;
    std::map<std::vector<int>, std::vector<int>> groups;  // trace -> member indices
    for (int i = 0; i < fam.size(); ++i) {
      auto trace = set_intersect(current[static_cast<size_t>(i)], a.vertices);
      if (!trace.empty()) groups[std::move(trace)].push_back(i);
    }
    for (auto& [trace, group] : groups) {
      if (group.size() < 2) continue;
      std::vector<std::vector<int>> restrictions(group.size());
      for (size_t gi = 0; gi < group.size(); ++gi) {
        for (int v : current[static_cast<size_t>(group[gi])])
          if (idx.vertex_in_gx(v, x)) restrictions[gi].push_back(v);
      }
      // pusher: minimal restriction in the containment order, lowest index on ties
      int pusher_gi = -1;
      for (size_t gi = 0; gi < group.size(); ++gi) {
        bool minimal = true;
        for (size_t gj = 0; gj < group.size(); ++gj) {
          if (gi == gj) continue;
          if (restrictions[gj].size() < restrictions[gi].size() &&
              std::includes(restrictions[gi].begin(), restrictions[gi].end(), restrictions[gj].begin(),
                            restrictions[gj].end())) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          pusher_gi = static_cast<int>(gi);
          break;
        }
      }
      const int pusher = group[static_cast<size_t>(pusher_gi)];
      const auto& pusher_restriction = restrictions[static_cast<size_t>(pusher_gi)];
      for (size_t gi = 0; gi < group.size(); ++gi) {
        int i = group[gi];
        if (i == pusher) continue;
        auto diff = set_minus(restrictions[gi], pusher_restriction);
        if (diff.empty()) continue;
        auto whole_diff = set_minus(current[static_cast<size_t>(i)], current[static_cast<size_t>(pusher)]);
        if (diff != whole_diff)
          throw precondition_error(
              "push_sparsify: restriction difference leaks outside G_x (piercing family)",
              "{\"pushed\":" + std::to_string(i) + ",\"pusher\":" + std::to_string(pusher) + "}");
        if (!induced_connected(g, diff))
          throw precondition_error("push_sparsify: pushed difference disconnected (piercing family)",
                                   "{\"pushed\":" + std::to_string(i) + "}");
        std::pair<int, int> connecting{-1, -1};
        for (int u : diff) {
          for (int v : current[static_cast<size_t>(pusher)]) {
            if (g.has_edge(u, v)) {
              connecting = {u, v};
              break;
            }
          }
          if (connecting.first >= 0) break;
        }
        if (connecting.first < 0)
          throw precondition_error("push_sparsify: no connecting edge (piercing family)",
                                   "{\"pushed\":" + std::to_string(i) + "}");
        PushEntry e;
        e.pushed = i;
        e.pusher = pusher;
        e.adhesion_edge = a.edge;
        e.connecting_edge = connecting;
        e.before = current[static_cast<size_t>(i)];
        e.after = diff;
        e.pusher_at_push = current[static_cast<size_t>(pusher)];
        ledger.entries.push_back(std::move(e));
        current[static_cast<size_t>(i)] = diff;
        ledger.push_counts[static_cast<size_t>(i)]++;
      }
    }
  }

  ledger.final_family = SubgraphFamily(current, fam.name, g.n);
  ledger.unique_map.assign(static_cast<size_t>(fam.size()), -1);
  std::map<std::vector<int>, int> representative;
  for (int i = 0; i < fam.size(); ++i) {
    auto it = representative.find(current[static_cast<size_t>(i)]);
    if (it == representative.end()) {
      representative.emplace(current[static_cast<size_t>(i)], i);
      ledger.unique_map[static_cast<size_t>(i)] = i;
    } else {
      ledger.unique_map[static_cast<size_t>(i)] = it->second;
    }
  }
  return ledger;
}

DualCore dual_pipeline_core(const Graph& chordal_host, const SubgraphFamily& fam,
                            const TreeDecomposition& rooted_td, double sparsity_bound,
                            bool force_push) {
  DualCore out;
  auto sparse_now = sparsity(chordal_host, fam, rooted_td);
  if (!force_push && static_cast<double>(sparse_now.k) <= sparsity_bound) {
    out.support = k_sds(chordal_host, fam, rooted_td);
    out.kept.resize(static_cast<size_t>(fam.size()));
    for (int i = 0; i < fam.size(); ++i) out.kept[static_cast<size_t>(i)] = i;
    return out;
  }
  out.pushed = true;
  auto mr = containment_maximal(fam);
  out.kept = mr.kept;
  out.ledger = push_sparsify(chordal_host, mr.family, rooted_td);

  // k-SDS over the unique representatives
  std::vector<int> uniq_positions;  // positions into mr.family
  for (int i = 0; i < mr.family.size(); ++i)
    if (out.ledger.unique_map[static_cast<size_t>(i)] == i) uniq_positions.push_back(i);
  std::vector<std::vector<int>> uniq_sets;
  uniq_sets.reserve(uniq_positions.size());
  for (int i : uniq_positions) uniq_sets.push_back(out.ledger.final_family.member(i));
  SubgraphFamily uniq(uniq_sets, fam.name, chordal_host.n);
  Support core = k_sds(chordal_host, uniq, rooted_td);

  // per-bag label sets, for honest width accounting after extra edges
  std::vector<std::set<int>> bag_members(rooted_td.bags.size());
  for (size_t b = 0; b < rooted_td.bags.size(); ++b) {
    for (size_t u = 0; u < uniq_sets.size(); ++u) {
      bool hits = std::any_of(uniq_sets[u].begin(), uniq_sets[u].end(), [&](int v) {
        return std::binary_search(rooted_td.bags[b].begin(), rooted_td.bags[b].end(), v);
      });
      if (hits) bag_members[b].insert(mr.kept[static_cast<size_t>(uniq_positions[u])]);
    }
  }

  // relabel k-SDS vertices to original member indices, then append the
  // non-representative duplicates
  Support q;
  for (size_t u = 0; u < uniq_positions.size(); ++u)
    q.labels.push_back(mr.kept[static_cast<size_t>(uniq_positions[u])]);
  q.edges = core.edges;
  q.provenance = core.provenance;
  for (int i = 0; i < mr.family.size(); ++i) {
    int rep_pos = out.ledger.unique_map[static_cast<size_t>(i)];
    if (rep_pos == i) continue;
    int at = q.index_of(mr.kept[static_cast<size_t>(rep_pos)]);
    q.labels.push_back(mr.kept[static_cast<size_t>(i)]);
    q.add_edge(q.size() - 1, at);  // duplicates hang off their representative
  }

  // Every pushed member lost vertices to its pusher; for each lost vertex the
  // pusher is the member still covering it, so the pushed member's own label
  // must be adjacent to the pusher's label. The edge is covered by the bag
  // holding the connecting edge (that bag also meets the representative).
  for (const auto& e : out.ledger.entries) {
    int a = q.index_of(mr.kept[static_cast<size_t>(e.pushed)]);
    int b = q.index_of(mr.kept[static_cast<size_t>(e.pusher)]);
    if (a == b || q.has_edge(a, b)) continue;
    q.add_edge(a, b);
    for (size_t bg = 0; bg < rooted_td.bags.size(); ++bg) {
      const auto& bag = rooted_td.bags[bg];
      if (std::binary_search(bag.begin(), bag.end(), e.connecting_edge.first) &&
          std::binary_search(bag.begin(), bag.end(), e.connecting_edge.second)) {
        bag_members[bg].insert(mr.kept[static_cast<size_t>(e.pushed)]);
        bag_members[bg].insert(mr.kept[static_cast<size_t>(e.pusher)]);
        break;
      }
    }
  }
  size_t widest = 0;
  for (const auto& s : bag_members) widest = std::max(widest, s.size());
  q.provenance.width_achieved = static_cast<int>(widest) - 1;

  // contained members hang off their maximal successor
  out.support = attach_pendants(q, mr.successor);
  return out;
}

Support dual_support(const GraphSystem& sys, const TreeDecomposition& td) {
  return dual_support(sys, td, false);
}

Support dual_support(const GraphSystem& sys, const TreeDecomposition& td, bool force_push) {
  auto rep = validate(sys.graph, td);
  if (!rep.ok) throw precondition_error("dual_support: invalid decomposition: " + rep.violation, "{}");
  const int t = td.width();
  auto rooted = binarize_and_root(td);
  Graph cc = chordal_complete(sys.graph, rooted);
  const double bound = std::ldexp(1.0, 4 * (t + 1));
  auto core = dual_pipeline_core(cc, sys.family_h, rooted, bound, force_push);
  Support q = std::move(core.support);
  q.provenance.kind = "dual";
  q.provenance.width_bound_claimed = bound;
  return q;
}

Support build_dual(const GraphSystem& sys, const TreeDecomposition* provided) {
  TreeDecomposition td;
  if (provided) {
    td = *provided;
  } else {
    td = build_decomposition(sys.graph, sys.graph.n <= 20 ? BuildMode::ExactSmall : BuildMode::MinFillHeuristic);
  }
  return dual_support(sys, td);
}

}  // namespace supports
