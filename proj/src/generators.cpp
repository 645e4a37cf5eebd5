#include "supports/generators.hpp"

#include <algorithm>
#include <random>

namespace supports {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  if (k == 0) return {std::vector<int>{}};
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

LowerBoundInstance gen_primal_lb(int m) {
  if (m < 2) throw std::invalid_argument("primal lower bound needs m >= 2");
  const int n = m / 2;
  const int N = static_cast<int>(binomial(n, n / 2));
  // id layout: R = 0..n-1, C = n..2n-1, B row-major afterwards
  const int b0 = 2 * n;
  auto bid = [&](int i, int j) { return b0 + (i - 1) * N + (j - 1); };  // 1-based grid coords
  const int total = 2 * n + N * N;

  std::vector<std::pair<int, int>> edges;
  for (int rc = 0; rc < 2 * n; ++rc)
    for (int b = b0; b < total; ++b) edges.push_back({rc, b});
  Graph host(total, std::move(edges));

  Coloring col;
  col.color.assign(static_cast<size_t>(total), Color::Red);
  for (int b = b0; b < total; ++b) col.color[static_cast<size_t>(b)] = Color::Blue;

  auto r_subsets = subsets_lex(n, n / 2);                       // R_i over ids 0..n-1
  auto c_subsets = subsets_lex(n, n / 2);                       // C_j over ids n..2n-1 after shift
  for (auto& s : c_subsets) for (int& v : s) v += n;

  std::vector<std::vector<int>> members;
  // row-consecutive pairs: {b_{i,j}, b_{i,j+1}} + R_i + C_{j+1}
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j + 1 <= N; ++j) {
      std::vector<int> mset = {bid(i, j), bid(i, j + 1)};
      mset.insert(mset.end(), r_subsets[static_cast<size_t>(i - 1)].begin(), r_subsets[static_cast<size_t>(i - 1)].end());
      mset.insert(mset.end(), c_subsets[static_cast<size_t>(j)].begin(), c_subsets[static_cast<size_t>(j)].end());
      members.push_back(std::move(mset));
    }
  }
  // column-consecutive pairs: {b_{i,j}, b_{i+1,j}} + R_{i+1} + C_j
  for (int i = 1; i + 1 <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      std::vector<int> mset = {bid(i, j), bid(i + 1, j)};
      mset.insert(mset.end(), r_subsets[static_cast<size_t>(i)].begin(), r_subsets[static_cast<size_t>(i)].end());
      mset.insert(mset.end(), c_subsets[static_cast<size_t>(j - 1)].begin(), c_subsets[static_cast<size_t>(j - 1)].end());
      members.push_back(std::move(mset));
    }
  }

  LowerBoundInstance out;
  out.kind = LbKind::PrimalLb;
  out.m = m;
  out.n_param = n;
  out.grid_n = N;
  out.system = GraphSystem(std::move(host), std::move(col),
                           SubgraphFamily(std::move(members), FamilyName::H, total));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) out.grid_coordinates[bid(i, j)] = {i, j};
  return out;
}

LowerBoundInstance gen_dual_lb(int m) {
  if (m < 2) throw std::invalid_argument("dual lower bound needs m >= 2");
  const int n = m / 2;
  const int N = static_cast<int>(binomial(n, n / 2));
  const int side = 2 * N + 1;
  const int b0 = 2 * n;
  auto bid = [&](int i, int j) { return b0 + (i - 1) * side + (j - 1); };  // 1-based board coords
  const int total = 2 * n + side * side;

  std::vector<std::pair<int, int>> edges;
  for (int rc = 0; rc < 2 * n; ++rc)
    for (int b = b0; b < total; ++b) edges.push_back({rc, b});
  Graph host(total, std::move(edges));

  Coloring col;
  col.color.assign(static_cast<size_t>(total), Color::Red);
  for (int b = b0; b < total; ++b) col.color[static_cast<size_t>(b)] = Color::Blue;

  auto r_subsets = subsets_lex(n, n / 2);
  auto c_subsets = subsets_lex(n, n / 2);
  for (auto& s : c_subsets) for (int& v : s) v += n;

  // Member (p,q) sits at board center (2p, 2q) and owns the checkerboard
  // cells between itself and its grid neighbors; such a cell is shared by
  // exactly those two members, which forces the N x N grid in any dual
  // support. Attached row/column subsets keep distinct members non-piercing.
  std::vector<std::vector<int>> members;
  std::map<int, std::pair<int, int>> coords;
  for (int p = 1; p <= N; ++p) {
    for (int q = 1; q <= N; ++q) {
      const auto& rp = r_subsets[static_cast<size_t>(p - 1)];
      const auto& cq = c_subsets[static_cast<size_t>(q - 1)];
      std::vector<int> mset = {bid(2 * p, 2 * q)};
      if (!rp.empty() || !cq.empty()) {
        if (q > 1) mset.push_back(bid(2 * p, 2 * q - 1));
        if (q < N) mset.push_back(bid(2 * p, 2 * q + 1));
        if (p > 1) mset.push_back(bid(2 * p - 1, 2 * q));
        if (p < N) mset.push_back(bid(2 * p + 1, 2 * q));
        mset.insert(mset.end(), rp.begin(), rp.end());
        mset.insert(mset.end(), cq.begin(), cq.end());
      }
      coords[static_cast<int>(members.size())] = {p, q};
      members.push_back(std::move(mset));
    }
  }

  LowerBoundInstance out;
  out.kind = LbKind::DualLb;
  out.m = m;
  out.n_param = n;
  out.grid_n = N;
  out.system = GraphSystem(std::move(host), std::move(col),
                           SubgraphFamily(std::move(members), FamilyName::H, total));
  out.grid_coordinates = std::move(coords);
  return out;
}

namespace {

struct CliqueHost {
  Graph graph;
  TreeDecomposition td;
  std::vector<std::vector<int>> bags;
};

CliqueHost build_clique_host(const CliqueSystemParams& p, std::mt19937_64& rng) {
  const int t = p.width;
  const int bag_size = t + 1;
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int next_vertex = 0;
  for (int b = 0; b < std::max(1, p.bag_count); ++b) {
    std::vector<int> bag;
    if (b == 0) {
      for (int i = 0; i < bag_size; ++i) bag.push_back(next_vertex++);
    } else {
      int parent = static_cast<int>(rng() % static_cast<unsigned long long>(b));
      int overlap = t > 0 ? static_cast<int>(rng() % static_cast<unsigned long long>(t + 1)) : 0;
      std::vector<int> pool = bags[static_cast<size_t>(parent)];
      std::shuffle(pool.begin(), pool.end(), rng);
      bag.assign(pool.begin(), pool.begin() + overlap);
      while (static_cast<int>(bag.size()) < bag_size) bag.push_back(next_vertex++);
      tree_edges.push_back({b, parent});
    }
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& bag : bags)
    for (size_t i = 0; i < bag.size(); ++i)
      for (size_t j = i + 1; j < bag.size(); ++j) edges.push_back({bag[i], bag[j]});
  CliqueHost host;
  host.graph = Graph(next_vertex, std::move(edges));
  host.td.bags = bags;
  host.td.tree_edges = tree_edges;
  host.td.root = 0;
  host.bags = std::move(bags);
  return host;
}

std::vector<std::vector<int>> sample_bag_cliques(const std::vector<std::vector<int>>& bags, int count,
                                                 std::mt19937_64& rng) {
  std::vector<std::vector<int>> members;
  for (int i = 0; i < count; ++i) {
    const auto& bag = bags[rng() % bags.size()];
    std::vector<int> member;
    for (int v : bag)
      if (rng() % 2 == 0) member.push_back(v);
    if (member.empty()) member.push_back(bag[rng() % bag.size()]);
    members.push_back(std::move(member));
  }
  return members;
}

Coloring sample_coloring(int n, double blue_fraction, std::mt19937_64& rng) {
  Coloring col = Coloring::all_blue(n);
  if (blue_fraction >= 1.0) return col;
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int v = 0; v < n; ++v)
    if (dist(rng) >= blue_fraction) col.color[static_cast<size_t>(v)] = Color::Red;
  return col;
}

}  // namespace

CliqueInstance gen_clique_system(const CliqueSystemParams& p) {
  std::mt19937_64 rng(p.seed);
  auto host = build_clique_host(p, rng);
  auto members = sample_bag_cliques(host.bags, p.member_count, rng);
  auto col = sample_coloring(host.graph.n, p.blue_fraction, rng);
  CliqueInstance out;
  out.system = GraphSystem(host.graph, std::move(col),
                           SubgraphFamily(std::move(members), FamilyName::H, host.graph.n));
  out.host_decomposition = std::move(host.td);
  return out;
}

CliqueIntersectionInstance gen_clique_intersection(const CliqueSystemParams& p) {
  std::mt19937_64 rng(p.seed);
  auto host = build_clique_host(p, rng);
  auto h_members = sample_bag_cliques(host.bags, p.member_count, rng);
  auto k_members = sample_bag_cliques(host.bags, p.k_member_count > 0 ? p.k_member_count : p.member_count, rng);
  CliqueIntersectionInstance out;
  out.system = IntersectionSystem(host.graph,
                                  SubgraphFamily(std::move(h_members), FamilyName::H, host.graph.n),
                                  SubgraphFamily(std::move(k_members), FamilyName::K, host.graph.n));
  out.host_decomposition = std::move(host.td);
  return out;
}

namespace {

// Random triangulation of the polygon lo..hi whose boundary edge {lo,hi}
// the caller supplies (the wrap edge at top level).
void triangulate(int lo, int hi, std::vector<std::pair<int, int>>& edges, std::mt19937_64& rng) {
  if (hi - lo <= 2) return;
  int mid = lo + 1 + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo - 1));
  if (mid > lo + 1) edges.push_back({lo, mid});
  if (hi > mid + 1) edges.push_back({mid, hi});
  triangulate(lo, mid, edges, rng);
  triangulate(mid, hi, edges, rng);
}

std::vector<int> random_arc(int n, std::mt19937_64& rng) {
  int start = static_cast<int>(rng() % static_cast<unsigned long long>(n));
  int max_len = std::max(1, n - 1);
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(std::min(max_len, n / 2 + 1)));
  std::vector<int> arc;
  for (int i = 0; i < len; ++i) arc.push_back((start + i) % n);
  std::sort(arc.begin(), arc.end());
  return arc;
}

bool pair_non_piercing(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> d1, d2;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d1));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d2));
  if (!d1.empty() && !induced_connected(g, d1)) return false;
  if (!d2.empty() && !induced_connected(g, d2)) return false;
  return true;
}

}  // namespace

OuterplanarInstance gen_outerplanar_system(const OuterplanarParams& p) {
  if (p.n < 3) throw std::invalid_argument("outerplanar generator needs n >= 3");
  std::mt19937_64 rng(p.seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < p.n; ++v) edges.push_back({v, (v + 1) % p.n});
  triangulate(0, p.n - 1, edges, rng);
  Graph host(p.n, std::move(edges));

  auto grow_family = [&](int count, bool& exhausted) {
    std::vector<std::vector<int>> fam;
    for (int i = 0; i < count; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < p.retry_budget; ++attempt) {
        auto cand = random_arc(p.n, rng);
        bool ok = true;
        for (const auto& m : fam)
          if (!pair_non_piercing(host, cand, m)) {
            ok = false;
            break;
          }
        if (ok) {
          fam.push_back(std::move(cand));
          placed = true;
          break;
        }
      }
      if (!placed) exhausted = true;
    }
    return fam;
  };

  OuterplanarInstance out;
  bool exhausted = false;
  auto h = grow_family(p.h_count, exhausted);
  auto k = grow_family(p.k_count, exhausted);
  out.retry_exhausted = exhausted;
  out.system = IntersectionSystem(host, SubgraphFamily(std::move(h), FamilyName::H, p.n),
                                  SubgraphFamily(std::move(k), FamilyName::K, p.n));
  return out;
}

}  // namespace supports
