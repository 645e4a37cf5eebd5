#include "supports/treedecomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace supports {

int TreeDecomposition::width() const {
  size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

std::vector<std::vector<int>> TreeDecomposition::node_adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [x, y] : tree_edges) {
    adj[static_cast<size_t>(x)].push_back(y);
    adj[static_cast<size_t>(y)].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> TreeDecomposition::parents() const {
  if (!root) throw precondition_error("decomposition is not rooted", "{}");
  auto adj = node_adjacency();
  std::vector<int> parent(bags.size(), -1);
  std::vector<char> seen(bags.size(), 0);
  std::queue<int> q;
  q.push(*root);
  seen[static_cast<size_t>(*root)] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[static_cast<size_t>(x)]) {
      if (seen[static_cast<size_t>(y)]) continue;
      seen[static_cast<size_t>(y)] = 1;
      parent[static_cast<size_t>(y)] = x;
      q.push(y);
    }
  }
  return parent;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
  auto parent = parents();
  std::vector<std::vector<int>> ch(bags.size());
  for (int x = 0; x < node_count(); ++x)
    if (parent[static_cast<size_t>(x)] >= 0) ch[static_cast<size_t>(parent[static_cast<size_t>(x)])].push_back(x);
  for (auto& c : ch) std::sort(c.begin(), c.end());
  return ch;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  const int k = td.node_count();
  if (k == 0) return {false, "no nodes"};
  if (static_cast<int>(td.tree_edges.size()) != k - 1) return {false, "tree edge count is not nodes-1"};
  for (auto [x, y] : td.tree_edges)
    if (x < 0 || y < 0 || x >= k || y >= k || x == y) return {false, "bad tree edge"};
  // connectivity of the node tree
  auto adj = td.node_adjacency();
  std::vector<char> seen(static_cast<size_t>(k), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[static_cast<size_t>(x)])
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++reached;
        q.push(y);
      }
  }
  if (reached != k) return {false, "tree edges do not connect the nodes"};
  for (const auto& b : td.bags)
    for (int v : b)
      if (v < 0 || v >= g.n) return {false, "bag vertex out of range"};
  // every vertex's bags form a connected subtree
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> holders;
    for (int x = 0; x < k; ++x)
      if (std::binary_search(td.bags[static_cast<size_t>(x)].begin(), td.bags[static_cast<size_t>(x)].end(), v))
        holders.push_back(x);
    if (holders.empty()) return {false, "vertex " + std::to_string(v) + " in no bag"};
    std::vector<char> hseen(static_cast<size_t>(k), 0);
    std::queue<int> hq;
    hq.push(holders[0]);
    hseen[static_cast<size_t>(holders[0])] = 1;
    int hreached = 1;
    while (!hq.empty()) {
      int x = hq.front();
      hq.pop();
      for (int y : adj[static_cast<size_t>(x)]) {
        if (hseen[static_cast<size_t>(y)]) continue;
        if (!std::binary_search(td.bags[static_cast<size_t>(y)].begin(), td.bags[static_cast<size_t>(y)].end(), v))
          continue;
        hseen[static_cast<size_t>(y)] = 1;
        ++hreached;
        hq.push(y);
      }
    }
    if (hreached != static_cast<int>(holders.size()))
      return {false, "bags containing vertex " + std::to_string(v) + " are not a subtree"};
  }
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (const auto& b : td.bags) {
      if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      return {false, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not covered"};
  }
  if (td.root && (*td.root < 0 || *td.root >= k)) return {false, "root out of range"};
  return {};
}

TreeDecomposition binarize_and_root(const TreeDecomposition& td, std::optional<int> root_choice) {
  int root = root_choice.value_or(td.root.value_or(0));
  if (root < 0 || root >= td.node_count()) throw std::invalid_argument("root out of range");

  TreeDecomposition rooted = td;
  rooted.root = root;
  auto children = rooted.children();

  // Rebuild top-down; a node with k > 2 children becomes a chain of
  // duplicated bags, each duplicate taking one more child.
  TreeDecomposition out;
  out.root = 0;
  std::function<void(int, int)> build = [&](int old_node, int new_parent) {
    int id = static_cast<int>(out.bags.size());
    out.bags.push_back(td.bags[static_cast<size_t>(old_node)]);
    if (new_parent >= 0) out.tree_edges.push_back({id, new_parent});
    const auto& ch = children[static_cast<size_t>(old_node)];
    if (ch.size() <= 2) {
      for (int c : ch) build(c, id);
      return;
    }
    build(ch[0], id);
    int prev = id;
    for (size_t i = 1; i < ch.size(); ++i) {
      if (i + 1 < ch.size()) {
        int dup = static_cast<int>(out.bags.size());
        out.bags.push_back(td.bags[static_cast<size_t>(old_node)]);
        out.tree_edges.push_back({dup, prev});
        build(ch[i], dup);
        prev = dup;
      } else {
        build(ch[i], prev);
      }
    }
  };
  build(root, -1);
  return out;
}

Graph chordal_complete(const Graph& g, const TreeDecomposition& td) {
  auto rep = validate(g, td);
  if (!rep.ok) throw precondition_error("chordal_complete: invalid decomposition: " + rep.violation, "{}");
  std::vector<std::pair<int, int>> edge_list = g.edges;
  for (const auto& b : td.bags)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) edge_list.push_back({b[i], b[j]});
  return Graph(g.n, std::move(edge_list));
}

namespace {

// Build a decomposition from an elimination order by simulating elimination
// on a working adjacency structure; bag(v) = {v} plus current neighbors.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.n;
  std::vector<std::set<int>> work(static_cast<size_t>(n));
  for (auto [u, v] : g.edges) {
    work[static_cast<size_t>(u)].insert(v);
    work[static_cast<size_t>(v)].insert(u);
  }
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  TreeDecomposition td;
  td.bags.assign(static_cast<size_t>(n), {});
  std::vector<int> parent(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    std::vector<int> nb(work[static_cast<size_t>(v)].begin(), work[static_cast<size_t>(v)].end());
    std::vector<int> bag = nb;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[static_cast<size_t>(i)] = bag;
    if (!nb.empty()) {
      int nxt = *std::min_element(nb.begin(), nb.end(), [&](int a, int b) {
        return pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)];
      });
      parent[static_cast<size_t>(i)] = pos[static_cast<size_t>(nxt)];
    }
    // make neighbors a clique, remove v
    for (int a : nb) {
      work[static_cast<size_t>(a)].erase(v);
      for (int b : nb)
        if (a != b) work[static_cast<size_t>(a)].insert(b);
    }
  }
  for (int i = 0; i < n; ++i) {
    int p = parent[static_cast<size_t>(i)];
    if (p < 0) {
      // last vertex of a component: hang it off the next bag to keep a tree
      if (i + 1 < n) p = i + 1;
    }
    if (p >= 0) td.tree_edges.push_back({i, p});
  }
  td.root = n > 0 ? std::optional<int>(n - 1) : std::nullopt;
  if (n == 0) {
    td.bags.push_back({});
    td.root = 0;
  }
  return td;
}

std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.n;
  std::vector<std::set<int>> work(static_cast<size_t>(n));
  for (auto [u, v] : g.edges) {
    work[static_cast<size_t>(u)].insert(v);
    work[static_cast<size_t>(v)].insert(u);
  }
  std::vector<char> gone(static_cast<size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[static_cast<size_t>(v)]) continue;
      long fill = 0;
      const auto& nb = work[static_cast<size_t>(v)];
      for (auto it = nb.begin(); it != nb.end(); ++it)
        for (auto jt = std::next(it); jt != nb.end(); ++jt)
          if (!work[static_cast<size_t>(*it)].count(*jt)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    order.push_back(best);
    gone[static_cast<size_t>(best)] = 1;
    auto nb = work[static_cast<size_t>(best)];
    for (int a : nb) {
      work[static_cast<size_t>(a)].erase(best);
      for (int b : nb)
        if (a != b) work[static_cast<size_t>(a)].insert(b);
    }
    work[static_cast<size_t>(best)].clear();
  }
  return order;
}

// Exact elimination-order DP over vertex subsets: best[S] is the minimum over
// orders eliminating exactly S first of the largest bag met so far. Q(S, v)
// counts vertices outside S+{v} reachable from v through S.
std::vector<int> exact_order(const Graph& g) {
  const int n = g.n;
  const uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  std::vector<uint32_t> adj_mask(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges) {
    adj_mask[static_cast<size_t>(u)] |= (1u << v);
    adj_mask[static_cast<size_t>(v)] |= (1u << u);
  }
  auto q_size = [&](uint32_t s, int v) {
    // BFS from v through s
    uint32_t frontier = 1u << v;
    uint32_t visited = frontier;
    uint32_t reach = 0;
    while (frontier) {
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f) {
        int u = __builtin_ctz(f);
        f &= f - 1;
        uint32_t nb = adj_mask[static_cast<size_t>(u)] & ~visited;
        reach |= nb & ~s;
        next |= nb & s;
      }
      visited |= next;
      frontier = next;
    }
    reach &= ~(1u << v);
    return __builtin_popcount(reach);
  };
  std::vector<signed char> best(static_cast<size_t>(1u) << n, 127);
  std::vector<signed char> pick(static_cast<size_t>(1u) << n, -1);
  best[0] = -1;  // width of eliminating nothing
  for (uint32_t s = 1; s <= full; ++s) {
    uint32_t t = s;
    while (t) {
      int v = __builtin_ctz(t);
      t &= t - 1;
      uint32_t prev = s & ~(1u << v);
      int cand = std::max<int>(best[prev], q_size(prev, v));
      if (cand < best[s]) {
        best[s] = static_cast<signed char>(cand);
        pick[s] = static_cast<signed char>(v);
      }
    }
    if (full == 0) break;
  }
  std::vector<int> order(static_cast<size_t>(n));
  uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = pick[s];
    order[static_cast<size_t>(i)] = v;
    s &= ~(1u << v);
  }
  return order;
}

}  // namespace

TreeDecomposition build_decomposition(const Graph& g, BuildMode mode, int exact_limit) {
  if (g.n == 0) {
    TreeDecomposition td;
    td.bags.push_back({});
    td.root = 0;
    return td;
  }
  std::vector<int> order;
  switch (mode) {
    case BuildMode::ExactSmall:
      if (g.n > exact_limit)
        throw precondition_error("exact decomposition limited to " + std::to_string(exact_limit) + " vertices",
                                 "{\"n\":" + std::to_string(g.n) + "}");
      order = exact_order(g);
      break;
    case BuildMode::MinFillHeuristic:
      order = min_fill_order(g);
      break;
  }
  return decomposition_from_order(g, order);
}

Restriction restrict(const TreeDecomposition& td, int x) {
  if (!td.root) throw precondition_error("restrict requires a rooted decomposition", "{}");
  if (x < 0 || x >= td.node_count()) throw std::invalid_argument("node out of range");
  auto ch = td.children();
  Restriction out;
  out.node_map.assign(static_cast<size_t>(td.node_count()), -1);
  std::vector<int> stack{x};
  std::set<int> vset;
  while (!stack.empty()) {
    int z = stack.back();
    stack.pop_back();
    int id = static_cast<int>(out.td.bags.size());
    out.node_map[static_cast<size_t>(z)] = id;
    out.td.bags.push_back(td.bags[static_cast<size_t>(z)]);
    vset.insert(td.bags[static_cast<size_t>(z)].begin(), td.bags[static_cast<size_t>(z)].end());
    for (auto it = ch[static_cast<size_t>(z)].rbegin(); it != ch[static_cast<size_t>(z)].rend(); ++it)
      stack.push_back(*it);
  }
  auto parent = td.parents();
  for (int z = 0; z < td.node_count(); ++z) {
    int nz = out.node_map[static_cast<size_t>(z)];
    if (nz < 0 || z == x) continue;
    int p = parent[static_cast<size_t>(z)];
    out.td.tree_edges.push_back({nz, out.node_map[static_cast<size_t>(p)]});
  }
  out.td.root = 0;
  out.vertices.assign(vset.begin(), vset.end());
  return out;
}

std::vector<int> post_order(const TreeDecomposition& td) {
  auto ch = td.children();
  std::vector<int> out;
  out.reserve(td.bags.size());
  // iterative post-order, children ascending
  std::vector<std::pair<int, size_t>> stack{{td.root.value(), 0}};
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < ch[static_cast<size_t>(x)].size()) {
      int c = ch[static_cast<size_t>(x)][i++];
      stack.push_back({c, 0});
    } else {
      out.push_back(x);
      stack.pop_back();
    }
  }
  return out;
}

SubtreeIndex::SubtreeIndex(const TreeDecomposition& decomposition) : td(&decomposition) {
  const int k = td->node_count();
  tin.assign(static_cast<size_t>(k), -1);
  tout.assign(static_cast<size_t>(k), -1);
  depth.assign(static_cast<size_t>(k), 0);
  auto ch = td->children();
  int timer = 0;
  std::vector<std::pair<int, size_t>> stack{{td->root.value(), 0}};
  tin[static_cast<size_t>(td->root.value())] = timer++;
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < ch[static_cast<size_t>(x)].size()) {
      int c = ch[static_cast<size_t>(x)][i++];
      depth[static_cast<size_t>(c)] = depth[static_cast<size_t>(x)] + 1;
      tin[static_cast<size_t>(c)] = timer++;
      stack.push_back({c, 0});
    } else {
      tout[static_cast<size_t>(x)] = timer;
      stack.pop_back();
    }
  }
  int max_vertex = -1;
  for (const auto& b : td->bags)
    for (int v : b) max_vertex = std::max(max_vertex, v);
  top_node.assign(static_cast<size_t>(max_vertex + 1), -1);
  for (int x = 0; x < k; ++x) {
    for (int v : td->bags[static_cast<size_t>(x)]) {
      int& t = top_node[static_cast<size_t>(v)];
      if (t < 0 || depth[static_cast<size_t>(x)] < depth[static_cast<size_t>(t)]) t = x;
    }
  }
}

bool SubtreeIndex::vertex_in_gx(int v, int x) const {
  if (v >= static_cast<int>(top_node.size()) || top_node[static_cast<size_t>(v)] < 0) return false;
  if (in_subtree(top_node[static_cast<size_t>(v)], x)) return true;
  const auto& bag = td->bags[static_cast<size_t>(x)];
  return std::binary_search(bag.begin(), bag.end(), v);
}

void SubtreeIndex::note_added(int v, int node) {
  if (v >= static_cast<int>(top_node.size())) top_node.resize(static_cast<size_t>(v + 1), -1);
  int& t = top_node[static_cast<size_t>(v)];
  if (t < 0 || depth[static_cast<size_t>(node)] < depth[static_cast<size_t>(t)]) t = node;
}

std::vector<AdhesionSet> adhesion_sets(const TreeDecomposition& td) {
  auto parent = td.parents();
  std::vector<AdhesionSet> out;
  for (int x : post_order(td)) {
    int p = parent[static_cast<size_t>(x)];
    if (p < 0) continue;
    AdhesionSet a;
    a.edge = {x, p};
    std::set_intersection(td.bags[static_cast<size_t>(x)].begin(), td.bags[static_cast<size_t>(x)].end(),
                          td.bags[static_cast<size_t>(p)].begin(), td.bags[static_cast<size_t>(p)].end(),
                          std::back_inserter(a.vertices));
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace supports
