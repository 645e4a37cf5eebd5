#include "supports/graph.hpp"

#include <algorithm>
#include <queue>

namespace supports {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n(vertex_count) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges = std::move(edge_list);
  adj.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  const auto& a = adj[static_cast<size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Coloring::blue_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (is_blue(v)) out.push_back(v);
  return out;
}

SubgraphFamily::SubgraphFamily(std::vector<std::vector<int>> member_sets, FamilyName family_name,
                               int host_vertex_count)
    : members(std::move(member_sets)), name(family_name) {
  for (auto& m : members) {
    if (m.empty()) throw std::invalid_argument("empty family member");
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.front() < 0 || m.back() >= host_vertex_count)
      throw std::invalid_argument("family member vertex out of range");
  }
}

namespace {

void require_members_connected(const Graph& g, const SubgraphFamily& fam, const char* what) {
  for (int i = 0; i < fam.size(); ++i) {
    if (!induced_connected(g, fam.member(i)))
      throw precondition_error(what, "{\"disconnected_member\":" + std::to_string(i) + "}");
  }
}

}  // namespace

GraphSystem::GraphSystem(Graph g, SubgraphFamily h)
    : GraphSystem(std::move(g), Coloring{}, std::move(h)) {}

GraphSystem::GraphSystem(Graph g, Coloring c, SubgraphFamily h)
    : graph(std::move(g)), coloring(std::move(c)), family_h(std::move(h)) {
  if (coloring.color.empty()) coloring = Coloring::all_blue(graph.n);
  if (coloring.size() != graph.n) throw std::invalid_argument("coloring size mismatch");
  require_members_connected(graph, family_h, "graph system member not connected");
}

IntersectionSystem::IntersectionSystem(Graph g, SubgraphFamily h, SubgraphFamily k)
    : graph(std::move(g)), family_h(std::move(h)), family_k(std::move(k)) {
  family_h.name = FamilyName::H;
  family_k.name = FamilyName::K;
  require_members_connected(graph, family_h, "intersection system H member not connected");
  require_members_connected(graph, family_k, "intersection system K member not connected");
}

void Support::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("support self-loop");
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::invalid_argument("support edge out of range");
  if (i > j) std::swap(i, j);
  edges.insert({i, j});
}

bool Support::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) > 0;
}

int Support::index_of(int label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[static_cast<size_t>(i)] == label) return i;
  return -1;
}

bool induced_connected(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  for (int v : s)
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  std::vector<int> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> seen(sorted.size(), 0);
  std::queue<int> q;
  q.push(sorted[0]);
  seen[0] = 1;
  size_t reached = 1;
  auto pos = [&](int v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) return -1;
    return static_cast<int>(it - sorted.begin());
  };
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[static_cast<size_t>(u)]) {
      int p = pos(w);
      if (p >= 0 && !seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == sorted.size();
}

NonPiercingReport is_non_piercing(const Graph& g, const SubgraphFamily& fam) {
  for (int i = 0; i < fam.size(); ++i)
    if (!induced_connected(g, fam.member(i)))
      throw precondition_error("non-piercing check: member not connected",
                               "{\"disconnected_member\":" + std::to_string(i) + "}");
  for (int i = 0; i < fam.size(); ++i) {
    for (int j = 0; j < fam.size(); ++j) {
      if (i == j) continue;
      std::vector<int> diff;
      std::set_difference(fam.member(i).begin(), fam.member(i).end(), fam.member(j).begin(),
                          fam.member(j).end(), std::back_inserter(diff));
      if (!diff.empty() && !induced_connected(g, diff)) return {false, i, j};
    }
  }
  return {};
}

MaximalReduction containment_maximal(const SubgraphFamily& fam) {
  MaximalReduction out;
  const int m = fam.size();
  std::vector<int> owner(static_cast<size_t>(m), -1);  // removed -> kept, -1 when kept
  std::vector<char> removed(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || removed[static_cast<size_t>(i)]) continue;
      const auto& a = fam.member(i);
      const auto& b = fam.member(j);
      bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
      if (!subset) continue;
      if (a.size() < b.size() || (a == b && j < i)) {
        removed[static_cast<size_t>(i)] = 1;
        break;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (removed[static_cast<size_t>(i)]) continue;
    out.kept.push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    if (!removed[static_cast<size_t>(i)]) continue;
    for (int k : out.kept) {
      const auto& a = fam.member(i);
      const auto& b = fam.member(k);
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        owner[static_cast<size_t>(i)] = k;
        break;  // kept indices ascend, so this is the lowest-index successor
      }
    }
    out.successor[i] = owner[static_cast<size_t>(i)];
  }
  std::vector<std::vector<int>> kept_sets;
  kept_sets.reserve(out.kept.size());
  for (int k : out.kept) kept_sets.push_back(fam.member(k));
  out.family.members = std::move(kept_sets);
  out.family.name = fam.name;
  return out;
}

Support attach_pendants(const Support& support_on_maximal, const std::map<int, int>& successor) {
  Support out = support_on_maximal;
  for (const auto& [removed, kept] : successor) {
    int at = out.index_of(kept);
    if (at < 0)
      throw precondition_error("attach_pendants: successor label absent",
                               "{\"successor\":" + std::to_string(kept) + "}");
    out.labels.push_back(removed);
    int added = out.size() - 1;
    out.add_edge(added, at);
    if (out.provenance.embedding) {
      // Keep the pendant next to its successor on the outer face.
      auto& order = *out.provenance.embedding;
      auto it = std::find(order.begin(), order.end(), at);
      order.insert(it == order.end() ? order.end() : it + 1, added);
    }
  }
  return out;
}

}  // namespace supports
