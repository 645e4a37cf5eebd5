#include <doctest.h>

#include <cmath>

#include "supports/generators.hpp"
#include "supports/io.hpp"
#include "supports/primal.hpp"
#include "supports/verify.hpp"

using namespace supports;

namespace {

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

TEST_CASE("is_easy") {
  SUBCASE("all-blue coloring: easy for any system") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    GraphSystem sys(g, SubgraphFamily({{0, 1, 2}, {2, 3}}, FamilyName::H, 4));
    auto td = binarize_and_root(build_decomposition(g, BuildMode::ExactSmall));
    CHECK(is_easy(sys, td).easy);
  }
  SUBCASE("single bag: no adhesion sets") {
    Graph g(3, {{0, 1}, {1, 2}});
    Coloring red;
    red.color.assign(3, Color::Red);
    GraphSystem sys(g, red, SubgraphFamily({{0, 1, 2}}, FamilyName::H, 3));
    TreeDecomposition td;
    td.bags = {{0, 1, 2}};
    td.root = 0;
    CHECK(is_easy(sys, td).easy);
  }
  SUBCASE("star with red center: adhesion {v0} is all red") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Coloring col;
    col.color.assign(5, Color::Blue);
    col.color[0] = Color::Red;
    GraphSystem sys(g, col, SubgraphFamily({{1, 0, 3}}, FamilyName::H, 5));
    TreeDecomposition td;
    td.bags = {{0, 1, 2}, {0, 3, 4}};
    td.tree_edges = {{0, 1}};
    td.root = 1;
    auto rep = is_easy(sys, td);
    CHECK(!rep.easy);
    CHECK(rep.witness_adhesion == std::vector<int>{0});
    CHECK(rep.witness_member == 0);
  }
}

TEST_CASE("make_easy") {
  SUBCASE("already easy: nothing changes") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    GraphSystem sys(g, SubgraphFamily({{0, 1}, {1, 2, 3}}, FamilyName::H, 4));
    auto td = binarize_and_root(build_decomposition(g, BuildMode::ExactSmall));
    auto easy = make_easy(sys, td);
    CHECK(easy.bags == td.bags);
  }
  SUBCASE("star with red center and a two-bag decomposition") {
    for (int k = 2; k <= 4; ++k) {
      auto sys = star_instance(2 * k);
      TreeDecomposition td;
      std::vector<int> left{0}, right{0};
      for (int i = 1; i <= k; ++i) left.push_back(i);
      for (int i = k + 1; i <= 2 * k; ++i) right.push_back(i);
      td.bags = {left, right};
      td.tree_edges = {{0, 1}};
      td.root = 1;
      const int t = td.width();
      auto easy = make_easy(sys, td);
      CHECK(validate(sys.graph, easy).ok);
      CHECK(is_easy(sys, easy).easy);
      CHECK(easy.width() <= (1 << (t + 2)) + t);
      auto q = primal_support(sys, easy);
      CHECK(check_support(SupportKind::Primal, sys, q).ok);
    }
  }
  SUBCASE("sweep: random colored clique systems stay within the bound") {
    for (int t = 2; t <= 4; ++t) {
      for (unsigned long long seed = 0; seed < 20; ++seed) {
        CliqueSystemParams p;
        p.width = t;
        p.member_count = 18;
        p.blue_fraction = 0.5;
        p.seed = seed;
        auto inst = gen_clique_system(p);
        REQUIRE(is_non_piercing(inst.system.graph, inst.system.family_h).ok);
        auto td = binarize_and_root(inst.host_decomposition);
        auto easy = make_easy(inst.system, td);
        CHECK(validate(inst.system.graph, easy).ok);
        CHECK(is_easy(inst.system, easy).easy);
        CHECK(easy.width() <= (1 << (t + 2)) + t);
      }
    }
  }
}

TEST_CASE("primal_support") {
  SUBCASE("star instance gives the complete graph on the leaves") {
    auto sys = star_instance(4);
    auto q = build_primal(sys);
    CHECK(check_support(SupportKind::Primal, sys, q).ok);
    // every leaf pair is a 2-element blue hyperedge: K_4 forced
    CHECK(q.size() == 4);
    CHECK(q.edges.size() == 6);
  }
  SUBCASE("all vertices red: empty support") {
    Graph g(3, {{0, 1}, {1, 2}});
    Coloring red;
    red.color.assign(3, Color::Red);
    GraphSystem sys(g, red, SubgraphFamily({{0, 1, 2}}, FamilyName::H, 3));
    auto q = build_primal(sys);
    CHECK(q.size() == 0);
    CHECK(check_support(SupportKind::Primal, sys, q).ok);
  }
  SUBCASE("single member spanning the blue vertices of a path") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Coloring col;
    col.color.assign(5, Color::Blue);
    col.color[1] = Color::Red;
    col.color[3] = Color::Red;
    GraphSystem sys(g, col, SubgraphFamily({{0, 1, 2, 3, 4}}, FamilyName::H, 5));
    auto q = build_primal(sys);
    CHECK(check_support(SupportKind::Primal, sys, q).ok);
    CHECK(induced_connected(Graph(q.size(), {q.edges.begin(), q.edges.end()}),
                            [&] {
                              std::vector<int> all(static_cast<size_t>(q.size()));
                              for (int i = 0; i < q.size(); ++i) all[static_cast<size_t>(i)] = i;
                              return all;
                            }()));
  }
  SUBCASE("refuses a non-easy decomposition") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Coloring col;
    col.color.assign(5, Color::Blue);
    col.color[0] = Color::Red;
    GraphSystem sys(g, col, SubgraphFamily({{1, 0, 3}}, FamilyName::H, 5));
    TreeDecomposition td;
    td.bags = {{0, 1, 2}, {0, 3, 4}};
    td.tree_edges = {{0, 1}};
    td.root = 1;
    CHECK_THROWS_AS(primal_support(sys, td), precondition_error);
  }
}

TEST_CASE("make_easy on prefix families of a path") {
  // prefixes of a path are non-piercing but not bag-local, so the
  // augmentation genuinely runs
  const int n = 10;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  Graph g(n, edges);
  for (int red_mask = 0; red_mask < 8; ++red_mask) {
    Coloring col = Coloring::all_blue(n);
    for (int b = 0; b < 3; ++b)
      if (red_mask & (1 << b)) col.color[static_cast<size_t>(3 * b + 1)] = Color::Red;
    std::vector<std::vector<int>> members;
    for (int a = 1; a < n; a += 2) {
      std::vector<int> prefix;
      for (int v = 0; v <= a; ++v) prefix.push_back(v);
      members.push_back(prefix);
    }
    GraphSystem sys(g, col, SubgraphFamily(members, FamilyName::H, n));
    REQUIRE(is_non_piercing(g, sys.family_h).ok);
    auto td = binarize_and_root(build_decomposition(g, BuildMode::ExactSmall));
    const int t = td.width();
    auto easy = make_easy(sys, td);
    CHECK(validate(g, easy).ok);
    CHECK(is_easy(sys, easy).easy);
    CHECK(easy.width() <= (1 << (t + 2)) + t);
    auto q = primal_support(sys, easy);
    CHECK(check_support(SupportKind::Primal, sys, q).ok);
  }
}

TEST_CASE("primal pipeline is deterministic") {
  CliqueSystemParams p;
  p.width = 3;
  p.member_count = 15;
  p.blue_fraction = 0.4;
  p.seed = 123;
  auto a = gen_clique_system(p);
  auto b = gen_clique_system(p);
  auto qa = build_primal(a.system, &a.host_decomposition);
  auto qb = build_primal(b.system, &b.host_decomposition);
  CHECK(serialize_support(qa) == serialize_support(qb));
}

TEST_CASE("end-to-end primal width bound over random instances") {
  for (int t = 2; t <= 3; ++t) {
    for (unsigned long long seed = 100; seed < 130; ++seed) {
      CliqueSystemParams p;
      p.width = t;
      p.member_count = 20;
      p.blue_fraction = 0.6;
      p.seed = seed;
      auto inst = gen_clique_system(p);
      auto q = build_primal(inst.system, &inst.host_decomposition);
      CHECK(check_support(SupportKind::Primal, inst.system, q).ok);
      CHECK(q.provenance.width_achieved <= (1 << (t + 2)) + t);
    }
  }
}
