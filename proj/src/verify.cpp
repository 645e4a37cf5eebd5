#include "supports/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace supports {

namespace {

// Connected components of q restricted to the label positions in `positions`.
std::vector<std::vector<int>> support_components(const Support& q, const std::vector<int>& positions) {
  std::vector<std::vector<int>> adj(q.labels.size());
  std::vector<char> in(q.labels.size(), 0);
  for (int p : positions) in[static_cast<size_t>(p)] = 1;
  for (auto [i, j] : q.edges) {
    if (in[static_cast<size_t>(i)] && in[static_cast<size_t>(j)]) {
      adj[static_cast<size_t>(i)].push_back(j);
      adj[static_cast<size_t>(j)].push_back(i);
    }
  }
  std::vector<char> seen(q.labels.size(), 0);
  std::vector<std::vector<int>> comps;
  for (int s : positions) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      comp.push_back(q.labels[static_cast<size_t>(u)]);
      for (int w : adj[static_cast<size_t>(u)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          bfs.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

SupportCheck check_hyperedges(const Support& q, const std::vector<std::vector<int>>& hyperedges,
                              const std::vector<int>& expected_labels) {
  std::vector<int> want(expected_labels);
  std::sort(want.begin(), want.end());
  std::vector<int> have(q.labels);
  std::sort(have.begin(), have.end());
  if (want != have)
    throw precondition_error("support label set mismatch", "{\"expected\":" + std::to_string(want.size()) +
                                                               ",\"got\":" + std::to_string(have.size()) + "}");
  std::unordered_map<int, int> pos;
  for (int i = 0; i < q.size(); ++i) pos[q.labels[static_cast<size_t>(i)]] = i;
  for (size_t h = 0; h < hyperedges.size(); ++h) {
    if (hyperedges[h].size() <= 1) continue;
    std::vector<int> positions;
    positions.reserve(hyperedges[h].size());
    for (int lab : hyperedges[h]) positions.push_back(pos.at(lab));
    auto comps = support_components(q, positions);
    if (comps.size() > 1) return {false, static_cast<int>(h), comps};
  }
  return {};
}

}  // namespace

SupportCheck check_support(SupportKind kind, const GraphSystem& sys, const Support& q) {
  const auto& fam = sys.family_h;
  if (kind == SupportKind::Primal) {
    std::vector<std::vector<int>> hyperedges;
    for (int i = 0; i < fam.size(); ++i) {
      std::vector<int> blue;
      for (int v : fam.member(i))
        if (sys.coloring.is_blue(v)) blue.push_back(v);
      hyperedges.push_back(std::move(blue));
    }
    return check_hyperedges(q, hyperedges, sys.coloring.blue_vertices());
  }
  if (kind == SupportKind::Dual) {
    std::vector<std::vector<int>> hyperedges(static_cast<size_t>(sys.graph.n));
    for (int i = 0; i < fam.size(); ++i)
      for (int v : fam.member(i)) hyperedges[static_cast<size_t>(v)].push_back(i);
    std::vector<int> labels(static_cast<size_t>(fam.size()));
    for (int i = 0; i < fam.size(); ++i) labels[static_cast<size_t>(i)] = i;
    return check_hyperedges(q, hyperedges, labels);
  }
  throw std::invalid_argument("intersection checks need an IntersectionSystem");
}

SupportCheck check_support(const IntersectionSystem& sys, const Support& q) {
  std::vector<std::vector<int>> hyperedges;
  for (int k = 0; k < sys.family_k.size(); ++k) {
    std::vector<int> hk;
    for (int i = 0; i < sys.family_h.size(); ++i) {
      std::vector<int> inter;
      std::set_intersection(sys.family_h.member(i).begin(), sys.family_h.member(i).end(),
                            sys.family_k.member(k).begin(), sys.family_k.member(k).end(),
                            std::back_inserter(inter));
      if (!inter.empty()) hk.push_back(i);
    }
    hyperedges.push_back(std::move(hk));
  }
  std::vector<int> labels(static_cast<size_t>(sys.family_h.size()));
  for (int i = 0; i < sys.family_h.size(); ++i) labels[static_cast<size_t>(i)] = i;
  return check_hyperedges(q, hyperedges, labels);
}

namespace {

// tw(S) = min over v in S of max(tw(S \ v), |reachable outside S through S|).
struct TreewidthDp {
  int n;
  std::vector<uint32_t> adj;
  std::unordered_map<uint32_t, int> memo;

  int q_size(uint32_t s, int v) const {
    uint32_t frontier = 1u << v, visited = 1u << v, reach = 0;
    while (frontier) {
      uint32_t next = 0, f = frontier;
      while (f) {
        int u = __builtin_ctz(f);
        f &= f - 1;
        uint32_t nb = adj[static_cast<size_t>(u)] & ~visited;
        reach |= nb & ~s;
        next |= nb & s;
        visited |= nb;
      }
      frontier = next;
    }
    return __builtin_popcount(reach & ~(1u << v));
  }

  int solve(uint32_t s) {
    if (s == 0) return -1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int best = n + 1;
    uint32_t t = s;
    while (t) {
      int v = __builtin_ctz(t);
      t &= t - 1;
      uint32_t prev = s & ~(1u << v);
      int q = q_size(prev, v);
      if (q >= best) continue;  // max(...) can only be worse
      int rest = solve(prev);
      best = std::min(best, std::max(rest, q));
    }
    memo[s] = best;
    return best;
  }
};

}  // namespace

int exact_treewidth(const Graph& g, int limit) {
  if (g.n > limit)
    throw precondition_error("exact_treewidth limited to " + std::to_string(limit) + " vertices",
                             "{\"n\":" + std::to_string(g.n) + "}");
  if (g.n == 0) return -1;
  TreewidthDp dp;
  dp.n = g.n;
  dp.adj.assign(static_cast<size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    dp.adj[static_cast<size_t>(u)] |= 1u << v;
    dp.adj[static_cast<size_t>(v)] |= 1u << u;
  }
  uint32_t full = (g.n == 32) ? 0xffffffffu : ((1u << g.n) - 1u);
  return dp.solve(full);
}

namespace {

// K4-minor test: a graph has no K4 minor iff it reduces to nothing by
// deleting degree-<=1 vertices and suppressing degree-2 vertices (parallel
// edges merge; they carry no K4 content).
bool has_k4_minor(const Graph& g) {
  std::vector<std::set<int>> adj(static_cast<size_t>(g.n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }
  std::vector<char> alive(static_cast<size_t>(g.n), 1);
  bool changed = true;
  int remaining = g.n;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[static_cast<size_t>(v)]) continue;
      auto& nb = adj[static_cast<size_t>(v)];
      if (nb.size() > 2) continue;
      if (nb.size() == 2) {
        int a = *nb.begin(), b = *std::next(nb.begin());
        adj[static_cast<size_t>(a)].insert(b);
        adj[static_cast<size_t>(b)].insert(a);
      }
      for (int w : nb) adj[static_cast<size_t>(w)].erase(v);
      nb.clear();
      alive[static_cast<size_t>(v)] = 0;
      --remaining;
      changed = true;
    }
  }
  return remaining > 0;
}

// K2,3-minor test: some pair u,v joined by three internally vertex-disjoint
// paths of length >= 2. Vertex-capacity max flow with the direct edge removed.
bool has_k23_minor(const Graph& g) {
  const int n = g.n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // split nodes: in(v)=2v, out(v)=2v+1; internal capacity 1, endpoints inf
      int paths = 0;
      std::vector<std::map<int, int>> cap(static_cast<size_t>(2 * n));
      for (int w = 0; w < n; ++w) cap[static_cast<size_t>(2 * w)][2 * w + 1] = (w == u || w == v) ? 3 : 1;
      for (auto [a, b] : g.edges) {
        if ((a == u && b == v) || (a == v && b == u)) continue;  // paths of length >= 2 only
        cap[static_cast<size_t>(2 * a + 1)][2 * b] = 3;
        cap[static_cast<size_t>(2 * b + 1)][2 * a] = 3;
      }
      const int src = 2 * u + 1, dst = 2 * v;
      while (paths < 3) {
        std::vector<int> prev(static_cast<size_t>(2 * n), -1);
        std::queue<int> bfs;
        bfs.push(src);
        prev[static_cast<size_t>(src)] = src;
        while (!bfs.empty() && prev[static_cast<size_t>(dst)] < 0) {
          int x = bfs.front();
          bfs.pop();
          for (auto& [y, c] : cap[static_cast<size_t>(x)]) {
            if (c > 0 && prev[static_cast<size_t>(y)] < 0) {
              prev[static_cast<size_t>(y)] = x;
              bfs.push(y);
            }
          }
        }
        if (prev[static_cast<size_t>(dst)] < 0) break;
        for (int x = dst; x != src; x = prev[static_cast<size_t>(x)]) {
          int p = prev[static_cast<size_t>(x)];
          cap[static_cast<size_t>(p)][x]--;
          cap[static_cast<size_t>(x)][p]++;
        }
        ++paths;
      }
      if (paths >= 3) return true;
    }
  }
  return false;
}

}  // namespace

bool is_outerplanar(const Graph& g) {
  if (g.n >= 2 && g.edge_count() > 2 * g.n - 3) return false;  // edge bound prunes first
  return !has_k4_minor(g) && !has_k23_minor(g);
}

std::set<std::pair<int, int>> forced_edges(const LowerBoundInstance& lb) {
  std::set<std::pair<int, int>> out;
  const auto& sys = lb.system;
  if (lb.kind == LbKind::PrimalLb) {
    for (int i = 0; i < sys.family_h.size(); ++i) {
      std::vector<int> blue;
      for (int v : sys.family_h.member(i))
        if (sys.coloring.is_blue(v)) blue.push_back(v);
      if (blue.size() == 2) out.insert({std::min(blue[0], blue[1]), std::max(blue[0], blue[1])});
    }
  } else {
    for (int v = 0; v < sys.graph.n; ++v) {
      std::vector<int> owners;
      for (int i = 0; i < sys.family_h.size(); ++i)
        if (std::binary_search(sys.family_h.member(i).begin(), sys.family_h.member(i).end(), v))
          owners.push_back(i);
      if (owners.size() == 2) out.insert({owners[0], owners[1]});
    }
  }
  return out;
}

bool embedding_consistent(const Support& q) {
  if (!q.provenance.embedding) return true;
  const auto& order = *q.provenance.embedding;
  if (static_cast<int>(order.size()) != q.size()) return false;
  std::vector<int> pos(q.labels.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= q.size()) return false;
    if (pos[static_cast<size_t>(order[i])] >= 0) return false;
    pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
  }
  const int m = q.size();
  auto consecutive = [&](int a, int b) { return (a + 1) % m == b || (b + 1) % m == a; };
  std::vector<std::pair<int, int>> chords;
  for (auto [i, j] : q.edges) {
    int a = pos[static_cast<size_t>(i)], b = pos[static_cast<size_t>(j)];
    if (m > 2 && consecutive(a, b)) continue;
    chords.push_back({std::min(a, b), std::max(a, b)});
  }
  for (size_t x = 0; x < chords.size(); ++x) {
    for (size_t y = x + 1; y < chords.size(); ++y) {
      auto [a, b] = chords[x];
      auto [c, d] = chords[y];
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in && c != a && c != b && d != a && d != b) return false;
    }
  }
  return true;
}

}  // namespace supports
