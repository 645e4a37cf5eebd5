#include <doctest.h>

#include <cstdlib>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "supports/generators.hpp"
#include "supports/verify.hpp"

using namespace supports;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph grid(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph(rows * cols, edges);
}

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// star instance of the introduction: red center, blue leaves, all leaf pairs
GraphSystem star_instance(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  Graph g(n + 1, edges);
  Coloring col;
  col.color.assign(static_cast<size_t>(n + 1), Color::Blue);
  col.color[0] = Color::Red;
  std::vector<std::vector<int>> members;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) members.push_back({i, 0, j});
  return GraphSystem(g, col, SubgraphFamily(members, FamilyName::H, n + 1));
}

}  // namespace

TEST_CASE("check_support primal on the star instance") {
  auto sys = star_instance(4);
  Support kn;
  kn.labels = {1, 2, 3, 4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) kn.add_edge(i, j);
  CHECK(check_support(SupportKind::Primal, sys, kn).ok);

  SUBCASE("dropping one edge breaks exactly that pair member") {
    Support broken = kn;
    broken.edges.erase({0, 1});  // blue pair {1,2}
    auto rep = check_support(SupportKind::Primal, sys, broken);
    CHECK(!rep.ok);
    CHECK(rep.hyperedge == 0);  // member {1,0,2} listed first
    CHECK(rep.components.size() == 2);
  }
  SUBCASE("label mismatch refuses") {
    Support wrong = kn;
    wrong.labels = {1, 2, 3, 9};
    CHECK_THROWS_AS(check_support(SupportKind::Primal, sys, wrong), precondition_error);
  }
}

TEST_CASE("check_support with empty hyperedges is vacuous") {
  Graph g(3, {{0, 1}, {1, 2}});
  Coloring all_red;
  all_red.color.assign(3, Color::Red);
  GraphSystem sys(g, all_red, SubgraphFamily({{0, 1}}, FamilyName::H, 3));
  Support empty;
  CHECK(check_support(SupportKind::Primal, sys, empty).ok);
}

TEST_CASE("exact_treewidth") {
  Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  CHECK(exact_treewidth(tree) == 1);
  CHECK(exact_treewidth(complete(5)) == 4);
  CHECK(exact_treewidth(cycle(6)) == 2);
  CHECK(exact_treewidth(cycle(9)) == 2);
  for (int n = 2; n <= 4; ++n) CHECK(exact_treewidth(grid(n, n)) == n);
  CHECK_THROWS_AS(exact_treewidth(complete(21)), precondition_error);
}

TEST_CASE("is_outerplanar") {
  CHECK(is_outerplanar(cycle(3)));
  CHECK(is_outerplanar(cycle(8)));
  CHECK(!is_outerplanar(complete(4)));
  CHECK(!is_outerplanar(k23()));
  CHECK(is_outerplanar(Graph(0, {})));
  CHECK(is_outerplanar(Graph(3, {})));
  // forced K4 dual support of the abab-free counterexample is not outerplanar
  CHECK(!is_outerplanar(complete(4)));
  // fan: outerplanar
  Graph fan(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(is_outerplanar(fan));
  // K4 with one subdivided edge still has a K4 minor
  Graph k4sub(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}, {4, 3}});
  CHECK(!is_outerplanar(k4sub));
}

TEST_CASE("is_outerplanar agrees with the planarity route") {
  // classical equivalence: g is outerplanar iff g plus a universal vertex is
  // planar; boyer-myrvold is the independent side of this check
  std::mt19937_64 rng(19);
  auto planar_with_apex = [](const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<size_t>(g.n + 1));
    for (auto [u, v] : g.edges) boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), bg);
    for (int v = 0; v < g.n; ++v) boost::add_edge(static_cast<size_t>(g.n), static_cast<size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
  };
  int disagreements = 0;
  for (int round = 0; round < 120; ++round) {
    int n = 4 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 35) edges.push_back({i, j});
    Graph g(n, edges);
    if (is_outerplanar(g) != planar_with_apex(g)) ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(planar_with_apex(cycle(7)));
  CHECK(!planar_with_apex(complete(4)));
  CHECK(!planar_with_apex(k23()));
}

TEST_CASE("outerplanar implies treewidth at most 2 (cross-oracle)") {
  std::mt19937_64 rng(17);
  int outerplanar_seen = 0;
  for (int round = 0; round < 150; ++round) {
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 30) edges.push_back({i, j});
    Graph g(n, edges);
    if (is_outerplanar(g)) {
      ++outerplanar_seen;
      CHECK(exact_treewidth(g) <= 2);
    }
  }
  CHECK(outerplanar_seen > 10);
}

TEST_CASE("forced_edges") {
  SUBCASE("primal m=4: four edges forming the 2x2 grid cycle") {
    auto lb = gen_primal_lb(4);
    auto forced = forced_edges(lb);
    CHECK(forced.size() == 4);
    // the forced graph is exactly the grid on the recorded coordinates
    for (auto [u, v] : forced) {
      auto cu = lb.grid_coordinates.at(u), cv = lb.grid_coordinates.at(v);
      CHECK(std::abs(cu.first - cv.first) + std::abs(cu.second - cv.second) == 1);
    }
  }
  SUBCASE("dual m=4: forced grid over member labels") {
    auto lb = gen_dual_lb(4);
    auto forced = forced_edges(lb);
    int expected = 2 * lb.grid_n * (lb.grid_n - 1);
    CHECK(static_cast<int>(forced.size()) == expected);
    for (auto [u, v] : forced) {
      auto cu = lb.grid_coordinates.at(u), cv = lb.grid_coordinates.at(v);
      CHECK(std::abs(cu.first - cv.first) + std::abs(cu.second - cv.second) == 1);
    }
  }
  SUBCASE("m=2 boundary: trivial forced sets") {
    CHECK(forced_edges(gen_primal_lb(2)).empty());
    CHECK(forced_edges(gen_dual_lb(2)).empty());
  }
}

TEST_CASE("embedding consistency") {
  Support q;
  q.labels = {0, 1, 2, 3};
  q.add_edge(0, 1);
  q.add_edge(1, 2);
  q.add_edge(2, 3);
  q.add_edge(3, 0);
  q.add_edge(0, 2);
  q.provenance.embedding = std::vector<int>{0, 1, 2, 3};
  CHECK(embedding_consistent(q));
  q.add_edge(1, 3);  // crossing chord
  CHECK(!embedding_consistent(q));
  q.provenance.embedding.reset();
  CHECK(embedding_consistent(q));
}
