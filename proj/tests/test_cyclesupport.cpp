#include <doctest.h>

#include <random>

#include "supports/cyclesupport.hpp"
#include "supports/generators.hpp"
#include "supports/verify.hpp"

using namespace supports;

namespace {

// asteroidal family of the dual counterexample, shifted to 0-indexed C_6
std::vector<std::vector<int>> asteroidal() {
  return {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 3, 5}};
}

// alternate-sequence counterexample on C_7, 0-indexed
CycleSystem alternate_sequence() {
  std::vector<std::vector<int>> h = {{0, 4}, {1}, {2, 3}, {5, 6}};
  std::vector<std::vector<int>> k = {{0, 1}, {1, 2}, {3, 5}, {0, 6}, {1, 6}, {3, 4}};
  return CycleSystem(7, h, k);
}

Graph support_graph(const Support& q) {
  return Graph(q.size(), {q.edges.begin(), q.edges.end()});
}

void check_intersection_oracle(const CycleSystem& cs, const Support& q) {
  // H_K induced connectivity over the member-index labels
  std::vector<int> pos(cs.family_h.size(), -1);
  for (int i = 0; i < q.size(); ++i) pos[static_cast<size_t>(q.labels[static_cast<size_t>(i)])] = i;
  Graph sg = support_graph(q);
  for (const auto& k : cs.family_k) {
    std::vector<int> hk;
    for (size_t i = 0; i < cs.family_h.size(); ++i) {
      bool hit = std::any_of(cs.family_h[i].begin(), cs.family_h[i].end(), [&](int v) {
        return std::binary_search(k.begin(), k.end(), v);
      });
      if (hit) hk.push_back(pos[i]);
    }
    if (hk.size() <= 1) continue;
    CHECK(induced_connected(sg, hk));
  }
}

}  // namespace

TEST_CASE("run_decompose") {
  SUBCASE("two runs with tied chords: lowest chord index wins") {
    auto rd = run_decompose(7, {1, 2, 5});
    REQUIRE(rd.run_count() == 2);
    CHECK(rd.runs[0].start == 1);
    CHECK(rd.runs[0].end == 2);
    CHECK(rd.runs[1].start == 5);
    CHECK(rd.runs[1].end == 5);
    CHECK(rd.chord_lengths == std::vector<int>{4, 4});
    CHECK(rd.min_chord == 0);
  }
  SUBCASE("full cycle: one run, no chord") {
    auto rd = run_decompose(5, {0, 1, 2, 3, 4});
    CHECK(rd.run_count() == 1);
    CHECK(!rd.min_chord.has_value());
  }
  SUBCASE("singleton member") {
    auto rd = run_decompose(6, {3});
    CHECK(rd.run_count() == 1);
    CHECK(rd.runs[0].start == 3);
    CHECK(rd.runs[0].end == 3);
  }
  SUBCASE("wrapping run") {
    auto rd = run_decompose(6, {5, 0, 1});
    REQUIRE(rd.run_count() == 1);
    CHECK(rd.runs[0].start == 5);
    CHECK(rd.runs[0].end == 1);
  }
}

TEST_CASE("classify_axax and classify_abab") {
  SUBCASE("asteroidal family: abab-free but not axax-free") {
    auto fam = asteroidal();
    auto ax = classify_axax(6, fam);
    CHECK(!ax.free_);
    CHECK(ax.first == 0);
    CHECK(ax.second == 3);  // H4 pairs with H1
    CHECK(classify_abab(6, fam).free_);
  }
  SUBCASE("nested members are axax-free") {
    CHECK(classify_axax(8, {{1, 2, 3, 4}, {2, 3}}).free_);
  }
  SUBCASE("disjoint single runs are axax-free") {
    CHECK(classify_axax(8, {{0, 1}, {3, 4}, {6}}).free_);
  }
  SUBCASE("two crossing runs alternate in the abab sense") {
    auto rep = classify_abab(4, {{0, 2}, {1, 3}});
    CHECK(!rep.free_);
  }
  SUBCASE("axax-free families are abab-free") {
    std::mt19937_64 rng(23);
    int seen = 0;
    for (int round = 0; round < 200; ++round) {
      int n = 5 + static_cast<int>(rng() % 5);
      std::vector<std::vector<int>> fam;
      for (int i = 0; i < 4; ++i) {
        std::vector<int> m;
        for (int v = 0; v < n; ++v)
          if (rng() % 3 == 0) m.push_back(v);
        if (m.empty()) m.push_back(static_cast<int>(rng() % n));
        fam.push_back(m);
      }
      if (classify_axax(n, fam).free_) {
        ++seen;
        CHECK(classify_abab(n, fam).free_);
      }
    }
    CHECK(seen > 5);
  }
}

TEST_CASE("classify_strong_axax") {
  SUBCASE("alternate-sequence instance fails the intersection property at (H1, K3)") {
    auto rep = classify_strong_axax(alternate_sequence());
    CHECK(!rep.free_);
    CHECK(rep.failed == StrongAxaxReport::Clause::Intersection);
    CHECK(rep.h == 0);
    CHECK(rep.k == 2);
  }
  SUBCASE("projections of outerplanar non-piercing instances satisfy it") {
    for (unsigned long long seed = 0; seed < 25; ++seed) {
      OuterplanarParams p;
      p.n = 14;
      p.h_count = 6;
      p.k_count = 6;
      p.seed = seed;
      auto inst = gen_outerplanar_system(p);
      auto cs = project_to_cycle(inst.system.graph, inst.system.family_h, inst.system.family_k);
      CHECK(classify_strong_axax(cs).free_);
    }
  }
  SUBCASE("K = singletons with axax-free H is trivially strong") {
    std::vector<std::vector<int>> singles;
    for (int v = 0; v < 6; ++v) singles.push_back({v});
    CycleSystem cs(6, {{0, 1, 2}, {2, 3}}, singles);
    CHECK(classify_strong_axax(cs).free_);
  }
}

TEST_CASE("reduce") {
  SUBCASE("already reduced: identity") {
    CycleSystem cs(4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
    auto red = reduce(cs);
    REQUIRE(red.reduced.has_value());
    CHECK(red.reduced->n == 4);
    CHECK(red.kept == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("vertex covered only by K is removed") {
    CycleSystem cs(5, {{0, 1}, {3}}, {{0, 1, 2, 3, 4}});
    auto red = reduce(cs);
    REQUIRE(red.reduced.has_value());
    CHECK(red.reduced->n == 3);
    CHECK(red.kept == std::vector<int>{0, 1, 3});
  }
  SUBCASE("alternate-sequence instance keeps all seven vertices") {
    auto red = reduce(alternate_sequence());
    REQUIRE(red.reduced.has_value());
    CHECK(red.reduced->n == 7);
  }
}

TEST_CASE("reduce preserves the intersection hypergraph") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    int n = 6 + static_cast<int>(rng() % 8);
    std::vector<std::vector<int>> h, k;
    for (int i = 0; i < 4; ++i) {
      std::vector<int> m;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) m.push_back(v);
      if (m.empty()) m.push_back(static_cast<int>(rng() % n));
      h.push_back(m);
    }
    for (int i = 0; i < 4; ++i) {
      std::vector<int> m;
      for (int v = 0; v < n; ++v)
        if (rng() % 4 == 0) m.push_back(v);
      if (m.empty()) m.push_back(static_cast<int>(rng() % n));
      k.push_back(m);
    }
    CycleSystem cs(n, h, k);
    auto red = reduce(cs);
    auto intersects = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      return !inter.empty();
    };
    if (!red.reduced) continue;
    for (size_t i = 0; i < h.size(); ++i) {
      for (size_t j = 0; j < k.size(); ++j) {
        bool before = intersects(h[i], k[j]);
        bool after = false;
        if (red.h_map[i] >= 0 && red.k_map[j] >= 0)
          after = intersects(red.reduced->family_h[static_cast<size_t>(red.h_map[i])],
                             red.reduced->family_k[static_cast<size_t>(red.k_map[j])]);
        CHECK(before == after);
      }
    }
  }
}

TEST_CASE("strict_containment_maximal") {
  SUBCASE("strictly nested run removed and mapped") {
    auto sr = strict_containment_maximal(8, {{1, 2, 3, 4, 5}, {2, 3}});
    CHECK(sr.kept == std::vector<int>{0});
    CHECK(sr.successor.at(1) == 0);
  }
  SUBCASE("weak containment is kept") {
    auto sr = strict_containment_maximal(8, {{1, 2, 3, 4}, {1, 2}});
    CHECK(sr.kept == std::vector<int>{0, 1});
    CHECK(sr.successor.empty());
  }
  SUBCASE("incomparable runs are all kept") {
    auto sr = strict_containment_maximal(8, {{0, 1}, {2, 3}, {4, 5, 6}});
    CHECK(sr.kept.size() == 3);
  }
}

TEST_CASE("lex_cycle") {
  SUBCASE("distinct starts in clockwise order") {
    CHECK(lex_cycle(6, {{4, 5}, {0, 1}, {2, 3}}) == std::vector<int>{1, 2, 0});
  }
  SUBCASE("shared start ordered by run length") {
    CHECK(lex_cycle(6, {{2, 3, 4}, {2, 3}}) == std::vector<int>{1, 0});
  }
  SUBCASE("three arcs covering the cycle") {
    CHECK(lex_cycle(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}) == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("single_run_support") {
  SUBCASE("three covering arcs with K = H: the triangle cycle") {
    std::vector<std::vector<int>> fam = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    CycleSystem cs(6, fam, fam);
    auto q = single_run_support(cs);
    CHECK(q.size() == 3);
    CHECK(q.edges.size() == 3);
    check_intersection_oracle(cs, q);
    CHECK(is_outerplanar(support_graph(q)));
    CHECK(embedding_consistent(q));
  }
  SUBCASE("one member: a single vertex") {
    CycleSystem cs(4, {{0, 1}}, {{1}});
    auto q = single_run_support(cs);
    CHECK(q.size() == 1);
    CHECK(q.edges.empty());
  }
  SUBCASE("two members: a single edge") {
    CycleSystem cs(4, {{0, 1}, {2, 3}}, {{1, 2}});
    auto q = single_run_support(cs);
    CHECK(q.size() == 2);
    CHECK(q.edges.size() == 1);
    check_intersection_oracle(cs, q);
  }
  SUBCASE("random single-run systems pass the oracle") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
      int n = 6 + static_cast<int>(rng() % 8);
      std::vector<std::vector<int>> h, k;
      for (int i = 0; i < 5; ++i) {
        int s = static_cast<int>(rng() % n);
        int len = 1 + static_cast<int>(rng() % (n - 1));
        h.push_back(arc_vertices(n, s, (s + len - 1) % n));
        std::sort(h.back().begin(), h.back().end());
      }
      for (int i = 0; i < 4; ++i) {
        int s = static_cast<int>(rng() % n);
        int len = 1 + static_cast<int>(rng() % (n - 1));
        k.push_back(arc_vertices(n, s, (s + len - 1) % n));
        std::sort(k.back().begin(), k.back().end());
      }
      auto sr = strict_containment_maximal(n, h);
      std::vector<std::vector<int>> maximal;
      for (int i : sr.kept) maximal.push_back(h[static_cast<size_t>(i)]);
      CycleSystem cs(n, maximal, k);
      auto q = single_run_support(cs);
      check_intersection_oracle(cs, q);
      CHECK(is_outerplanar(support_graph(q)));
      CHECK(embedding_consistent(q));
    }
  }
}

TEST_CASE("support_multi_run_k") {
  SUBCASE("all K single runs delegates to the cycle support") {
    std::vector<std::vector<int>> fam = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    CycleSystem cs(6, fam, {{1, 2}});
    auto q = support_multi_run_k(cs);
    CHECK(q.size() == 3);
    check_intersection_oracle(cs, q);
  }
  SUBCASE("H covering only two vertices reduces to the chain support") {
    CycleSystem cs(6, {{2}, {2, 3}, {3}}, {{1, 2}, {3, 4}, {0, 2, 3}});
    auto q = support_multi_run_k(cs);
    check_intersection_oracle(cs, q);
    CHECK(is_outerplanar(support_graph(q)));
  }
  SUBCASE("multi-run members in K refuse the single-run builder") {
    CycleSystem cs(6, {{0, 1}, {2, 3}}, {{0, 3}});
    CHECK_THROWS_AS(single_run_support(cs), precondition_error);
  }
  SUBCASE("one two-run K on a 6-cycle") {
    std::vector<std::vector<int>> h = {{0, 1}, {1, 2, 3}, {3, 4}, {4, 5, 0}};
    std::vector<std::vector<int>> k = {{0, 3}};  // two runs {0},{3}
    CycleSystem cs(6, h, k);
    auto q = support_multi_run_k(cs);
    check_intersection_oracle(cs, q);
    CHECK(is_outerplanar(support_graph(q)));
    CHECK(embedding_consistent(q));
  }
  SUBCASE("random axax-free systems with multi-run K") {
    std::mt19937_64 rng(37);
    int built = 0;
    for (int round = 0; round < 300 && built < 60; ++round) {
      int n = 6 + static_cast<int>(rng() % 10);
      // H: covering arcs
      std::vector<std::vector<int>> h;
      int at = 0;
      while (at < n) {
        int len = 1 + static_cast<int>(rng() % 4);
        int end = std::min(n - 1, at + len);
        auto arc = arc_vertices(n, at, end);
        std::sort(arc.begin(), arc.end());
        h.push_back(arc);
        at = end + 1;
      }
      // overlap arcs to make it interesting
      for (int i = 0; i < 2; ++i) {
        int s = static_cast<int>(rng() % n);
        int len = 1 + static_cast<int>(rng() % (n / 2));
        auto arc = arc_vertices(n, s, (s + len - 1) % n);
        std::sort(arc.begin(), arc.end());
        h.push_back(arc);
      }
      auto sr = strict_containment_maximal(n, h);
      std::vector<std::vector<int>> maximal;
      for (int i : sr.kept) maximal.push_back(h[static_cast<size_t>(i)]);
      // K: arbitrary subsets, kept only when the system stays axax-free
      std::vector<std::vector<int>> k;
      for (int i = 0; i < 4; ++i) {
        std::vector<int> m;
        for (int v = 0; v < n; ++v)
          if (rng() % 3 == 0) m.push_back(v);
        if (m.empty()) m.push_back(static_cast<int>(rng() % n));
        k.push_back(m);
      }
      if (!classify_axax(n, k).free_) continue;
      if (!classify_axax(n, maximal).free_) continue;
      CycleSystem cs(n, maximal, k);
      auto q = support_multi_run_k(cs);
      check_intersection_oracle(cs, q);
      CHECK(is_outerplanar(support_graph(q)));
      CHECK(embedding_consistent(q));
      ++built;
    }
    CHECK(built >= 40);
  }
}

TEST_CASE("outerplanar_intersection_support") {
  SUBCASE("single-run systems delegate") {
    std::vector<std::vector<int>> fam = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    CycleSystem cs(6, fam, fam);
    auto q = outerplanar_intersection_support(cs);
    check_intersection_oracle(cs, q);
    CHECK(is_outerplanar(support_graph(q)));
  }
  SUBCASE("projected generator instances pass oracle and outerplanarity") {
    for (unsigned long long seed = 0; seed < 40; ++seed) {
      OuterplanarParams p;
      p.n = 12 + static_cast<int>(seed % 9);
      p.h_count = 7;
      p.k_count = 7;
      p.seed = seed;
      auto inst = gen_outerplanar_system(p);
      auto cs = project_to_cycle(inst.system.graph, inst.system.family_h, inst.system.family_k);
      auto q = outerplanar_intersection_support(cs);
      check_intersection_oracle(cs, q);
      CHECK(is_outerplanar(support_graph(q)));
      CHECK(embedding_consistent(q));
      // the projection preserves the intersection hypergraph, so q also
      // supports the host-side system
      CHECK(check_support(inst.system, q).ok);
    }
  }
  SUBCASE("reduction below three vertices falls back to the chain support") {
    // only vertices 1 and 2 lie in both families
    CycleSystem cs(6, {{0, 1}, {1, 2}, {2, 3}, {4}}, {{1, 2}, {1}, {2, 5}});
    auto q = outerplanar_intersection_support(cs);
    CHECK(q.size() == 4);
    check_intersection_oracle(cs, q);
    CHECK(is_outerplanar(support_graph(q)));
    CHECK(embedding_consistent(q));
  }
  SUBCASE("K members disjoint from every H are vacuous") {
    CycleSystem cs(6, {{0, 1}, {1, 2}}, {{4, 5}});
    auto q = outerplanar_intersection_support(cs);
    CHECK(q.size() == 2);
    check_intersection_oracle(cs, q);
  }
  SUBCASE("asteroidal family with K = singletons is refused") {
    std::vector<std::vector<int>> singles;
    for (int v = 0; v < 6; ++v) singles.push_back({v});
    CHECK_THROWS_AS(outerplanar_intersection_support(CycleSystem(6, asteroidal(), singles)),
                    precondition_error);
  }
  SUBCASE("alternate-sequence instance is refused") {
    CHECK_THROWS_AS(outerplanar_intersection_support(alternate_sequence()), precondition_error);
  }
}

TEST_CASE("outerplanar_dual_support") {
  SUBCASE("nested runs give a path-like support") {
    std::vector<std::vector<int>> fam = {{0, 1, 2, 3, 4, 5}, {1, 2, 3}, {2, 3}};
    auto q = outerplanar_dual_support(6, fam);
    // dual oracle: members containing each vertex induce a connected subgraph
    Graph sg = support_graph(q);
    std::vector<int> pos(fam.size());
    for (int i = 0; i < q.size(); ++i) pos[static_cast<size_t>(q.labels[static_cast<size_t>(i)])] = i;
    for (int v = 0; v < 6; ++v) {
      std::vector<int> owners;
      for (size_t i = 0; i < fam.size(); ++i)
        if (std::binary_search(fam[i].begin(), fam[i].end(), v)) owners.push_back(pos[i]);
      if (owners.size() > 1) CHECK(induced_connected(sg, owners));
    }
    CHECK(is_outerplanar(sg));
  }
  SUBCASE("single member") {
    auto q = outerplanar_dual_support(4, {{1, 2}});
    CHECK(q.size() == 1);
  }
  SUBCASE("asteroidal family refused") {
    CHECK_THROWS_AS(outerplanar_dual_support(6, asteroidal()), precondition_error);
  }
}

TEST_CASE("outer_cycle_order") {
  SUBCASE("plain cycle: identity-like order") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 6; ++v) edges.push_back({v, (v + 1) % 6});
    auto order = outer_cycle_order(Graph(6, edges));
    CHECK(order.size() == 6);
  }
  SUBCASE("triangulated polygon recovers a valid order") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 4}});
    auto order = outer_cycle_order(g);
    CHECK(order.size() == 5);
  }
  SUBCASE("forest and disconnected hosts are fine") {
    Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    auto order = outer_cycle_order(g);
    CHECK(order.size() == 5);
  }
  SUBCASE("K4 is refused") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(outer_cycle_order(k4), precondition_error);
  }
  SUBCASE("random triangulations round-trip") {
    for (unsigned long long seed = 0; seed < 20; ++seed) {
      OuterplanarParams p;
      p.n = 10;
      p.h_count = 2;
      p.k_count = 2;
      p.seed = seed;
      auto inst = gen_outerplanar_system(p);
      auto order = outer_cycle_order(inst.system.graph);
      CHECK(static_cast<int>(order.size()) == inst.system.graph.n);
    }
  }
}
