#include "supports/cyclesupport.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace supports {

CycleSystem::CycleSystem(int cycle_length, std::vector<std::vector<int>> h, std::vector<std::vector<int>> k)
    : n(cycle_length), family_h(std::move(h)), family_k(std::move(k)) {
  if (n < 3) throw std::invalid_argument("cycle systems need n >= 3");
  auto normalize = [&](std::vector<std::vector<int>>& fam) {
    for (auto& m : fam) {
      if (m.empty()) throw std::invalid_argument("empty cycle-system member");
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      if (m.front() < 0 || m.back() >= n) throw std::invalid_argument("cycle member vertex out of range");
    }
  };
  normalize(family_h);
  normalize(family_k);
}

int arc_size(int n, int i, int j) { return (j - i + n) % n + 1; }

std::vector<int> arc_vertices(int n, int i, int j) {
  std::vector<int> out;
  int len = arc_size(n, i, j);
  out.reserve(static_cast<size_t>(len));
  for (int s = 0; s < len; ++s) out.push_back((i + s) % n);
  return out;
}

bool arc_strictly_contains(int n, int i, int j, int v) {
  if (v == i || v == j) return false;
  return (v - i + n) % n < (j - i + n) % n;
}

RunDecomposition run_decompose(int n, const std::vector<int>& member_vertices, int member_index) {
  if (member_vertices.empty()) throw std::invalid_argument("run_decompose: empty member");
  RunDecomposition out;
  out.member = member_index;
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int v : member_vertices) in[static_cast<size_t>(v)] = 1;
  std::vector<int> starts;
  for (int v = 0; v < n; ++v)
    if (in[static_cast<size_t>(v)] && !in[static_cast<size_t>((v - 1 + n) % n)]) starts.push_back(v);
  if (starts.empty()) {
    out.runs.push_back({0, n - 1});  // full cycle
    return out;
  }
  for (int s : starts) {
    int t = s;
    while (in[static_cast<size_t>((t + 1) % n)]) t = (t + 1) % n;
    out.runs.push_back({s, t});
  }
  if (out.runs.size() >= 2) {
    const int k = static_cast<int>(out.runs.size());
    for (int i = 0; i < k; ++i) {
      int t_i = out.runs[static_cast<size_t>(i)].end;
      int s_next = out.runs[static_cast<size_t>((i + 1) % k)].start;
      out.chords.push_back({t_i, s_next});
      out.chord_lengths.push_back(arc_size(n, t_i, s_next));
    }
    int best = 0;
    for (int i = 1; i < k; ++i)
      if (out.chord_lengths[static_cast<size_t>(i)] < out.chord_lengths[static_cast<size_t>(best)]) best = i;
    out.min_chord = best;
  }
  return out;
}

RunDecomposition run_decompose(const CycleSystem& cs, int member) {
  return run_decompose(cs.n, cs.family_h[static_cast<size_t>(member)], member);
}

namespace {

// Cyclic alternation of two disjoint vertex sets: >= 2 maximal blocks of each
// type (same-type runs merge across untyped vertices). Returns four
// witnessing vertices in cyclic order, or empty.
std::vector<int> alternation_witness(int n, const std::vector<int>& type_a, const std::vector<int>& type_x) {
  std::vector<char> ta(static_cast<size_t>(n), 0), tx(static_cast<size_t>(n), 0);
  for (int v : type_a) ta[static_cast<size_t>(v)] = 1;
  for (int v : type_x) tx[static_cast<size_t>(v)] = 1;
  std::vector<std::pair<char, int>> typed;  // (type, representative vertex) cyclic order
  for (int v = 0; v < n; ++v) {
    if (ta[static_cast<size_t>(v)])
      typed.push_back({'a', v});
    else if (tx[static_cast<size_t>(v)])
      typed.push_back({'x', v});
  }
  if (typed.size() < 4) return {};
  // merge cyclically-consecutive equal types
  std::vector<std::pair<char, int>> blocks;
  for (const auto& t : typed) {
    if (!blocks.empty() && blocks.back().first == t.first) continue;
    blocks.push_back(t);
  }
  while (blocks.size() > 1 && blocks.front().first == blocks.back().first) blocks.pop_back();
  if (blocks.size() < 4) return {};
  return {blocks[0].second, blocks[1].second, blocks[2].second, blocks[3].second};
}

AxaxReport classify_pattern(int n, const std::vector<std::vector<int>>& fam, bool outside_both) {
  for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
    for (int j = 0; j < static_cast<int>(fam.size()); ++j) {
      if (i == j || (outside_both && j < i)) continue;
      std::vector<int> a, x;
      std::set_difference(fam[static_cast<size_t>(i)].begin(), fam[static_cast<size_t>(i)].end(),
                          fam[static_cast<size_t>(j)].begin(), fam[static_cast<size_t>(j)].end(),
                          std::back_inserter(a));
      if (outside_both) {
        std::set_difference(fam[static_cast<size_t>(j)].begin(), fam[static_cast<size_t>(j)].end(),
                            fam[static_cast<size_t>(i)].begin(), fam[static_cast<size_t>(i)].end(),
                            std::back_inserter(x));
      } else {
        x = fam[static_cast<size_t>(j)];  // disjoint from a by construction
      }
      auto w = alternation_witness(n, a, x);
      if (!w.empty()) return {false, i, j, {w[0], w[1], w[2], w[3]}};
    }
  }
  return {};
}

}  // namespace

AxaxReport classify_axax(int n, const std::vector<std::vector<int>>& fam) {
  return classify_pattern(n, fam, false);
}

AxaxReport classify_abab(int n, const std::vector<std::vector<int>>& fam) {
  return classify_pattern(n, fam, true);
}

StrongAxaxReport classify_strong_axax(const CycleSystem& cs) {
  auto h_rep = classify_axax(cs.n, cs.family_h);
  if (!h_rep.free_)
    return {false, StrongAxaxReport::Clause::HAxax, h_rep.first, h_rep.second, h_rep.pattern};
  auto k_rep = classify_axax(cs.n, cs.family_k);
  if (!k_rep.free_)
    return {false, StrongAxaxReport::Clause::KAxax, k_rep.first, k_rep.second, k_rep.pattern};
  for (int h = 0; h < static_cast<int>(cs.family_h.size()); ++h) {
    for (int k = 0; k < static_cast<int>(cs.family_k.size()); ++k) {
      std::vector<int> inter;
      std::set_intersection(cs.family_h[static_cast<size_t>(h)].begin(), cs.family_h[static_cast<size_t>(h)].end(),
                            cs.family_k[static_cast<size_t>(k)].begin(), cs.family_k[static_cast<size_t>(k)].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) continue;
      auto w = alternation_witness(cs.n, cs.family_h[static_cast<size_t>(h)], cs.family_k[static_cast<size_t>(k)]);
      if (!w.empty())
        return {false, StrongAxaxReport::Clause::Intersection, h, k, {w[0], w[1], w[2], w[3]}};
    }
  }
  return {};
}

CycleReduction reduce(const CycleSystem& cs) {
  std::vector<char> in_h(static_cast<size_t>(cs.n), 0), in_k(static_cast<size_t>(cs.n), 0);
  for (const auto& m : cs.family_h)
    for (int v : m) in_h[static_cast<size_t>(v)] = 1;
  for (const auto& m : cs.family_k)
    for (int v : m) in_k[static_cast<size_t>(v)] = 1;
  CycleReduction out;
  out.vertex_map.assign(static_cast<size_t>(cs.n), -1);
  for (int v = 0; v < cs.n; ++v) {
    if (in_h[static_cast<size_t>(v)] && in_k[static_cast<size_t>(v)]) {
      out.vertex_map[static_cast<size_t>(v)] = static_cast<int>(out.kept.size());
      out.kept.push_back(v);
    }
  }
  auto restrict_family = [&](const std::vector<std::vector<int>>& fam, std::vector<int>& member_map) {
    std::vector<std::vector<int>> res;
    member_map.assign(fam.size(), -1);
    for (size_t i = 0; i < fam.size(); ++i) {
      std::vector<int> m;
      for (int v : fam[i])
        if (out.vertex_map[static_cast<size_t>(v)] >= 0) m.push_back(out.vertex_map[static_cast<size_t>(v)]);
      if (!m.empty()) {
        member_map[i] = static_cast<int>(res.size());
        res.push_back(std::move(m));
      }
    }
    return res;
  };
  auto h = restrict_family(cs.family_h, out.h_map);
  auto k = restrict_family(cs.family_k, out.k_map);
  if (static_cast<int>(out.kept.size()) >= 3)
    out.reduced = CycleSystem(static_cast<int>(out.kept.size()), std::move(h), std::move(k));
  return out;
}

namespace {

// A run (s,t) is strictly contained in (s2,t2) iff the vertex set is contained
// and neither endpoint is shared.
bool strictly_contained(int n, Run a, Run b) {
  if (a.start == b.start || a.end == b.end) return false;
  int len_a = arc_size(n, a.start, a.end), len_b = arc_size(n, b.start, b.end);
  if (len_a >= len_b) return false;
  int off = (a.start - b.start + n) % n;
  return off + len_a <= len_b && off > 0;
}

Run single_run_of(int n, const std::vector<int>& verts) {
  auto rd = run_decompose(n, verts);
  if (rd.run_count() != 1)
    throw precondition_error("member is not a single run", "{\"runs\":" + std::to_string(rd.run_count()) + "}");
  return rd.runs[0];
}

}  // namespace

StrictReduction strict_containment_maximal(int n, const std::vector<std::vector<int>>& fam) {
  std::vector<Run> runs;
  runs.reserve(fam.size());
  for (const auto& m : fam) runs.push_back(single_run_of(n, m));
  StrictReduction out;
  std::vector<char> removed(fam.size(), 0);
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = 0; j < fam.size(); ++j)
      if (i != j && strictly_contained(n, runs[i], runs[j])) {
        removed[i] = 1;
        break;
      }
  for (size_t i = 0; i < fam.size(); ++i)
    if (!removed[i]) out.kept.push_back(static_cast<int>(i));
  for (size_t i = 0; i < fam.size(); ++i) {
    if (!removed[i]) continue;
    for (int j : out.kept)
      if (strictly_contained(n, runs[i], runs[static_cast<size_t>(j)])) {
        out.successor[static_cast<int>(i)] = j;
        break;
      }
  }
  return out;
}

std::vector<int> lex_cycle(int n, const std::vector<std::vector<int>>& fam) {
  struct Key {
    int start, len, index;
  };
  std::vector<Key> keys;
  keys.reserve(fam.size());
  for (size_t i = 0; i < fam.size(); ++i) {
    Run r = single_run_of(n, fam[i]);
    keys.push_back({r.start, arc_size(n, r.start, r.end), static_cast<int>(i)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.len != b.len) return a.len < b.len;
    return a.index < b.index;
  });
  std::vector<int> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(k.index);
  return out;
}

// ----- internal recursion machinery ---------------------------------------

namespace {

struct Member {
  int origin;              // original H index carried through the recursion
  std::vector<int> verts;  // sorted local vertex ids
  int rank = 0;            // lex position at recursion entry; clip ties keep it
};

struct Sys {
  int n = 0;
  std::vector<Member> h;
  std::vector<Member> k;
};

// Lex cyclic order with inherited ranks as the tie-break: sub-system clips
// that tie must keep their parents' relative order or the glued outer cycle
// drifts away from C(H).
std::vector<int> lex_order_ranked(int n, const std::vector<Member>& fam) {
  struct Key {
    int start, len, rank, index;
  };
  std::vector<Key> keys;
  keys.reserve(fam.size());
  for (size_t i = 0; i < fam.size(); ++i) {
    auto rd = run_decompose(n, fam[i].verts);
    if (rd.run_count() != 1)
      throw precondition_error("member is not a single run", "{}");
    Run r = rd.runs[0];
    keys.push_back({r.start, arc_size(n, r.start, r.end), fam[i].rank, static_cast<int>(i)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.len != b.len) return a.len < b.len;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.index < b.index;
  });
  std::vector<int> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(k.index);
  return out;
}

void assign_ranks(int n, std::vector<Member>& fam) {
  auto order = lex_order_ranked(n, fam);
  for (size_t pos = 0; pos < order.size(); ++pos) fam[static_cast<size_t>(order[pos])].rank = static_cast<int>(pos);
}

void internal_check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("cycle support recursion invariant breached: ") + what);
}

int total_extra_runs(const Sys& s, const std::vector<Member>& fam) {
  int total = 0;
  for (const auto& m : fam) total += run_decompose(s.n, m.verts).run_count() - 1;
  return total;
}

// Cycle support over labels in lex cyclic order of s.h (all single runs).
Support cycle_support(const Sys& s) {
  auto order = lex_order_ranked(s.n, s.h);
  Support q;
  q.labels.reserve(s.h.size());
  for (const auto& m : s.h) q.labels.push_back(m.origin);
  std::vector<int> emb;
  emb.reserve(order.size());
  for (int idx : order) emb.push_back(idx);  // label position == list index
  const int m = static_cast<int>(order.size());
  if (m == 2) q.add_edge(order[0], order[1]);
  if (m >= 3)
    for (int i = 0; i < m; ++i) q.add_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>((i + 1) % m)]);
  q.provenance.kind = "outerplanar";
  q.provenance.embedding = std::move(emb);
  return q;
}

// Remap a sub-support's labels (origins) into the glued label space and merge.
void merge_edges(Support& glued, const Support& part, const std::map<int, int>& position_of_origin) {
  for (auto [i, j] : part.edges) {
    int a = position_of_origin.at(part.labels[static_cast<size_t>(i)]);
    int b = position_of_origin.at(part.labels[static_cast<size_t>(j)]);
    glued.add_edge(a, b);
  }
}

// H single runs (strict-containment free), K arbitrary, axax-free, every
// vertex covered by some H. Recursion on the number of extra K runs,
// splitting at the minimum K chord and gluing along the boundary members.
Support multi_run_k_rec(const Sys& s) {
  if (total_extra_runs(s, s.k) == 0) return cycle_support(s);

  // K0: minimum-length chord over multi-run K members, lowest index on ties
  int k0 = -1, best_len = -1, best_chord = -1;
  for (size_t i = 0; i < s.k.size(); ++i) {
    auto rd = run_decompose(s.n, s.k[i].verts);
    if (rd.run_count() < 2) continue;
    int c = *rd.min_chord;
    int len = rd.chord_lengths[static_cast<size_t>(c)];
    if (k0 < 0 || len < best_len) {
      k0 = static_cast<int>(i);
      best_len = len;
      best_chord = c;
    }
  }
  auto rd0 = run_decompose(s.n, s.k[static_cast<size_t>(k0)].verts);
  const int u0 = rd0.chords[static_cast<size_t>(best_chord)].first;
  const int v0 = rd0.chords[static_cast<size_t>(best_chord)].second;

  // C_R = arc[u0,v0] (+ the chord as its wrap edge), C_L = arc[v0,u0]
  const int nR = arc_size(s.n, u0, v0);
  const int nL = arc_size(s.n, v0, u0);
  auto posR = [&](int v) { return (v - u0 + s.n) % s.n; };
  auto posL = [&](int v) { return (v - v0 + s.n) % s.n; };
  auto inR = [&](int v) { return (v - u0 + s.n) % s.n < nR; };
  auto inL = [&](int v) { return (v - v0 + s.n) % s.n < nL; };

  Sys right;
  right.n = nR;
  for (const auto& m : s.h) {
    std::vector<int> part;
    for (int v : m.verts)
      if (inR(v)) part.push_back(posR(v));
    if (part.empty()) continue;
    std::sort(part.begin(), part.end());
    right.h.push_back({m.origin, std::move(part), m.rank});
  }
  for (const auto& m : s.k) {
    std::vector<int> part;
    for (int v : m.verts)
      if (inR(v)) part.push_back(posR(v));
    if (part.empty()) continue;
    std::sort(part.begin(), part.end());
    internal_check(run_decompose(nR, part).run_count() == 1, "K clip not a single run on C_R");
    right.k.push_back({m.origin, std::move(part), m.rank});
  }
  for (const auto& m : right.h)
    internal_check(run_decompose(nR, m.verts).run_count() == 1, "H clip not a single run on C_R");
  Support q_r = cycle_support(right);

  // The members containing u0 form a consecutive block of the lex cycle;
  // H_1 is the block's first element (deepest into C_L), and H'_s is the
  // last element of the v0 block. Block boundaries keep the glued outer
  // cycle equal to C(H) even when left-parts tie.
  auto order = lex_order_ranked(s.n, s.h);
  auto contains = [&](int member, int v) {
    return std::binary_search(s.h[static_cast<size_t>(member)].verts.begin(),
                              s.h[static_cast<size_t>(member)].verts.end(), v);
  };
  auto block_boundary = [&](int anchor, bool first) {
    const int m = static_cast<int>(order.size());
    for (int i = 0; i < m; ++i) {
      int cur = order[static_cast<size_t>(i)];
      int prev = order[static_cast<size_t>((i - 1 + m) % m)];
      int next = order[static_cast<size_t>((i + 1) % m)];
      if (!contains(cur, anchor)) continue;
      if (first && !contains(prev, anchor)) return cur;
      if (!first && !contains(next, anchor)) return cur;
    }
    // every member holds the anchor: any block boundary works
    return contains(order[0], anchor) ? order[0] : -1;
  };
  const int h1 = block_boundary(u0, true);
  const int hs = block_boundary(v0, false);
  internal_check(h1 >= 0 && hs >= 0, "chord endpoint not covered by H");

  Sys left;
  left.n = nL;
  for (size_t i = 0; i < s.h.size(); ++i) {
    const auto& m = s.h[i];
    bool touches_u0 = std::binary_search(m.verts.begin(), m.verts.end(), u0);
    bool touches_v0 = std::binary_search(m.verts.begin(), m.verts.end(), v0);
    bool special = static_cast<int>(i) == h1 || static_cast<int>(i) == hs;
    if ((touches_u0 || touches_v0) && !special) continue;  // nested in H_1 / H'_s on C_L
    std::vector<int> part;
    for (int v : m.verts)
      if (inL(v)) part.push_back(posL(v));
    if (part.empty()) continue;
    std::sort(part.begin(), part.end());
    left.h.push_back({m.origin, std::move(part), m.rank});
  }
  for (const auto& m : s.k) {
    std::vector<int> part;
    for (int v : m.verts)
      if (inL(v)) part.push_back(posL(v));
    if (part.empty()) continue;
    std::sort(part.begin(), part.end());
    left.k.push_back({m.origin, std::move(part), m.rank});
  }
  internal_check(total_extra_runs(left, left.k) < total_extra_runs(s, s.k), "N(C_L, K_L) did not decrease");
  Support q_l = multi_run_k_rec(left);

  // glue: identify the shared copies of H_1 and H'_s
  Support q;
  q.labels.reserve(s.h.size());
  std::map<int, int> pos;
  for (const auto& m : s.h) {
    pos[m.origin] = static_cast<int>(q.labels.size());
    q.labels.push_back(m.origin);
  }
  merge_edges(q, q_r, pos);
  merge_edges(q, q_l, pos);

  q.provenance.kind = "outerplanar";
  q.provenance.embedding = order;  // the glued outer cycle is C(H) itself
  return q;
}

// Coverage reduction: drop vertices in no H member (splices the cycle).
Sys reduce_by_h(const Sys& s) {
  std::vector<char> covered(static_cast<size_t>(s.n), 0);
  for (const auto& m : s.h)
    for (int v : m.verts) covered[static_cast<size_t>(v)] = 1;
  std::vector<int> map(static_cast<size_t>(s.n), -1);
  int kept = 0;
  for (int v = 0; v < s.n; ++v)
    if (covered[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = kept++;
  if (kept == s.n) return s;
  Sys out;
  out.n = kept;
  for (const auto& m : s.h) {
    std::vector<int> verts;
    for (int v : m.verts) verts.push_back(map[static_cast<size_t>(v)]);
    std::sort(verts.begin(), verts.end());
    out.h.push_back({m.origin, std::move(verts), m.rank});
  }
  for (const auto& m : s.k) {
    std::vector<int> verts;
    for (int v : m.verts)
      if (map[static_cast<size_t>(v)] >= 0) verts.push_back(map[static_cast<size_t>(v)]);
    if (verts.empty()) continue;
    std::sort(verts.begin(), verts.end());
    out.k.push_back({m.origin, std::move(verts), m.rank});
  }
  return out;
}

// Tiny systems (n <= 2 after reduction): a path over the labels ordered by
// which of the at-most-two vertices they contain keeps every H_K consecutive.
Support tiny_support(const std::vector<Member>& h, int n_vertices) {
  Support q;
  std::vector<int> first_only, both, second_only;
  for (size_t i = 0; i < h.size(); ++i) {
    bool has0 = std::binary_search(h[i].verts.begin(), h[i].verts.end(), 0);
    bool has1 = n_vertices >= 2 && std::binary_search(h[i].verts.begin(), h[i].verts.end(), 1);
    if (has0 && has1)
      both.push_back(static_cast<int>(i));
    else if (has0)
      first_only.push_back(static_cast<int>(i));
    else
      second_only.push_back(static_cast<int>(i));
  }
  std::vector<int> chain;
  chain.insert(chain.end(), first_only.begin(), first_only.end());
  chain.insert(chain.end(), both.begin(), both.end());
  chain.insert(chain.end(), second_only.begin(), second_only.end());
  for (const auto& m : h) q.labels.push_back(m.origin);
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    q.add_edge(chain[i], chain[i + 1]);
  q.provenance.kind = "outerplanar";
  q.provenance.embedding = chain;
  return q;
}

// General case: recursion on the number of extra H runs over the derived
// systems, gluing at the shared copy of H0. Input must be strong axax-free
// and H-covering.
Support intersection_rec(const Sys& input) {
  Sys s = reduce_by_h(input);
  if (s.n <= 2) return tiny_support(s.h, s.n);

  // containment-free reduction; removed members re-attach as pendants
  std::vector<std::vector<int>> sets;
  sets.reserve(s.h.size());
  for (const auto& m : s.h) sets.push_back(m.verts);
  SubgraphFamily fam(sets, FamilyName::H, s.n);
  auto mr = containment_maximal(fam);
  std::map<int, int> pendant_origins;  // removed origin -> successor origin
  if (!mr.successor.empty()) {
    for (const auto& [rem, kept] : mr.successor)
      pendant_origins[s.h[static_cast<size_t>(rem)].origin] = s.h[static_cast<size_t>(kept)].origin;
    std::vector<Member> maximal;
    for (int i : mr.kept) maximal.push_back(s.h[static_cast<size_t>(i)]);
    s.h = std::move(maximal);
  }

  Support q;
  if (total_extra_runs(s, s.h) == 0) {
    assign_ranks(s.n, s.h);
    q = multi_run_k_rec(s);
  } else {
    // H0: minimum chord over multi-run members
    int h0 = -1, best_len = -1, best_chord = -1;
    for (size_t i = 0; i < s.h.size(); ++i) {
      auto rd = run_decompose(s.n, s.h[i].verts);
      if (rd.run_count() < 2) continue;
      int c = *rd.min_chord;
      int len = rd.chord_lengths[static_cast<size_t>(c)];
      if (h0 < 0 || len < best_len) {
        h0 = static_cast<int>(i);
        best_len = len;
        best_chord = c;
      }
    }
    auto rd0 = run_decompose(s.n, s.h[static_cast<size_t>(h0)].verts);
    const int u0 = rd0.chords[static_cast<size_t>(best_chord)].first;
    const int v0 = rd0.chords[static_cast<size_t>(best_chord)].second;
    auto in_closed_r = [&](int v) { return (v - u0 + s.n) % s.n < arc_size(s.n, u0, v0); };
    auto in_open_r = [&](int v) { return arc_strictly_contains(s.n, u0, v0, v); };

    // derived right system: clips to arc[u0,v0] plus H0' = arc[v0,u0]
    Sys right;
    right.n = s.n;
    for (size_t i = 0; i < s.h.size(); ++i) {
      if (static_cast<int>(i) == h0) continue;
      std::vector<int> part;
      for (int v : s.h[i].verts)
        if (in_closed_r(v)) part.push_back(v);
      if (part.empty()) continue;
      std::sort(part.begin(), part.end());
      right.h.push_back({s.h[i].origin, std::move(part), s.h[i].rank});
    }
    right.h.push_back({s.h[static_cast<size_t>(h0)].origin, [&] {
                         auto verts = arc_vertices(s.n, v0, u0);
                         std::sort(verts.begin(), verts.end());
                         return verts;
                       }()});
    right.k = s.k;
    for (const auto& m : right.h)
      internal_check(run_decompose(s.n, m.verts).run_count() == 1, "derived H_R member not a single run");

    // derived left system: members avoiding arc(u0,v0), plus H0'' = H0 union arc[u0,v0]
    Sys left;
    left.n = s.n;
    for (size_t i = 0; i < s.h.size(); ++i) {
      if (static_cast<int>(i) == h0) continue;
      bool meets_open = std::any_of(s.h[i].verts.begin(), s.h[i].verts.end(), in_open_r);
      if (meets_open) {
        // Proposition chordpartition: such a member must contain u0 or v0, and
        // its left-side runs nest inside H0's
        bool has_u0 = std::binary_search(s.h[i].verts.begin(), s.h[i].verts.end(), u0);
        bool has_v0 = std::binary_search(s.h[i].verts.begin(), s.h[i].verts.end(), v0);
        bool crosses = std::any_of(s.h[i].verts.begin(), s.h[i].verts.end(),
                                   [&](int v) { return !in_closed_r(v); });
        internal_check(!crosses || has_u0 || has_v0, "chord partition violated");
        continue;
      }
      std::vector<int> part;
      for (int v : s.h[i].verts)
        if (!in_open_r(v)) part.push_back(v);
      if (part.empty()) continue;
      std::sort(part.begin(), part.end());
      left.h.push_back({s.h[i].origin, std::move(part), s.h[i].rank});
    }
    {
      std::vector<int> extended = s.h[static_cast<size_t>(h0)].verts;
      for (int v : arc_vertices(s.n, u0, v0)) extended.push_back(v);
      std::sort(extended.begin(), extended.end());
      extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
      left.h.push_back({s.h[static_cast<size_t>(h0)].origin, std::move(extended)});
    }
    left.k = s.k;
    internal_check(total_extra_runs(left, left.h) < total_extra_runs(s, s.h), "N(C, H_L) did not decrease");

    Sys right_reduced = reduce_by_h(right);
    assign_ranks(right_reduced.n, right_reduced.h);
    Support q_r = multi_run_k_rec(right_reduced);
    Support q_l = intersection_rec(left);

    q.labels.reserve(s.h.size());
    std::map<int, int> pos;
    for (const auto& m : s.h) {
      pos[m.origin] = static_cast<int>(q.labels.size());
      q.labels.push_back(m.origin);
    }
    merge_edges(q, q_r, pos);
    merge_edges(q, q_l, pos);

    // embedding: the left system's outer face with the right cycle spliced in
    // as a bubble at the shared H0 label (a cut vertex of the glued graph)
    std::vector<int> emb;
    auto splice = [&](const Support& part, bool skip_h0) {
      const auto& order = *part.provenance.embedding;
      const int h0_origin = s.h[static_cast<size_t>(h0)].origin;
      size_t at = 0;
      for (size_t i = 0; i < order.size(); ++i)
        if (part.labels[static_cast<size_t>(order[i])] == h0_origin) at = i;
      for (size_t i = 0; i < order.size(); ++i) {
        int lab = part.labels[static_cast<size_t>(order[(at + i) % order.size()])];
        if (skip_h0 && i == 0) continue;
        emb.push_back(pos.at(lab));
      }
    };
    splice(q_l, false);
    splice(q_r, true);
    q.provenance.kind = "outerplanar";
    q.provenance.embedding = std::move(emb);
  }

  if (!pendant_origins.empty()) q = attach_pendants(q, pendant_origins);
  return q;
}

Sys to_sys(const CycleSystem& cs) {
  Sys s;
  s.n = cs.n;
  for (size_t i = 0; i < cs.family_h.size(); ++i) s.h.push_back({static_cast<int>(i), cs.family_h[i]});
  for (size_t i = 0; i < cs.family_k.size(); ++i) s.k.push_back({static_cast<int>(i), cs.family_k[i]});
  return s;
}

// Final assembly: ensure every original member index 0..count-1 appears as a
// label (members dropped during reduction become isolated labels).
Support with_all_labels(Support q, int count) {
  std::vector<char> present(static_cast<size_t>(count), 0);
  for (int lab : q.labels) present[static_cast<size_t>(lab)] = 1;
  for (int i = 0; i < count; ++i) {
    if (present[static_cast<size_t>(i)]) continue;
    q.labels.push_back(i);
    if (q.provenance.embedding) q.provenance.embedding->push_back(q.size() - 1);
  }
  return q;
}

std::string pattern_json(const std::array<int, 4>& p) {
  return "[" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
         std::to_string(p[3]) + "]";
}

}  // namespace

Support single_run_support(const CycleSystem& cs) {
  for (const auto& m : cs.family_k) single_run_of(cs.n, m);
  auto sr = strict_containment_maximal(cs.n, cs.family_h);  // also validates single runs
  if (!sr.successor.empty())
    throw precondition_error("single_run_support: family has strict containments",
                             "{\"removed\":" + std::to_string(sr.successor.begin()->first) + "}");
  auto q = cycle_support(to_sys(cs));
  return q;
}

Support support_multi_run_k(const CycleSystem& cs) {
  auto h_rep = classify_axax(cs.n, cs.family_h);
  if (!h_rep.free_)
    throw precondition_error("support_multi_run_k: H not axax-free",
                             "{\"pair\":[" + std::to_string(h_rep.first) + "," + std::to_string(h_rep.second) +
                                 "],\"pattern\":" + pattern_json(h_rep.pattern) + "}");
  auto k_rep = classify_axax(cs.n, cs.family_k);
  if (!k_rep.free_)
    throw precondition_error("support_multi_run_k: K not axax-free",
                             "{\"pair\":[" + std::to_string(k_rep.first) + "," + std::to_string(k_rep.second) +
                                 "],\"pattern\":" + pattern_json(k_rep.pattern) + "}");
  auto sr = strict_containment_maximal(cs.n, cs.family_h);
  if (!sr.successor.empty())
    throw precondition_error("support_multi_run_k: family has strict containments", "{}");
  Sys s = reduce_by_h(to_sys(cs));
  if (s.n > 2) assign_ranks(s.n, s.h);
  Support q = s.n <= 2 ? tiny_support(s.h, s.n) : multi_run_k_rec(s);
  return with_all_labels(std::move(q), static_cast<int>(cs.family_h.size()));
}

Support outerplanar_intersection_support(const CycleSystem& cs) {
  auto strong = classify_strong_axax(cs);
  if (!strong.free_) {
    const char* clause = strong.failed == StrongAxaxReport::Clause::HAxax         ? "axax-H"
                         : strong.failed == StrongAxaxReport::Clause::KAxax       ? "axax-K"
                                                                                  : "intersection-property";
    throw precondition_error(std::string("outerplanar_intersection_support: not strong axax-free (") +
                                 clause + ")",
                             std::string("{\"clause\":\"") + clause + "\",\"first\":" +
                                 std::to_string(strong.h) + ",\"second\":" + std::to_string(strong.k) +
                                 ",\"pattern\":" + pattern_json(strong.pattern) + "}");
  }
  auto red = reduce(cs);
  Support q;
  if (!red.reduced) {
    // fewer than 3 surviving vertices: build directly over the restrictions
    std::vector<Member> h;
    for (size_t i = 0; i < cs.family_h.size(); ++i) {
      std::vector<int> verts;
      for (int v : cs.family_h[i])
        if (red.vertex_map[static_cast<size_t>(v)] >= 0) verts.push_back(red.vertex_map[static_cast<size_t>(v)]);
      if (!verts.empty()) h.push_back({static_cast<int>(i), std::move(verts)});
    }
    q = tiny_support(h, static_cast<int>(red.kept.size()));
  } else {
    Sys s;
    s.n = red.reduced->n;
    for (size_t i = 0; i < cs.family_h.size(); ++i)
      if (red.h_map[i] >= 0)
        s.h.push_back({static_cast<int>(i), red.reduced->family_h[static_cast<size_t>(red.h_map[i])]});
    for (size_t i = 0; i < cs.family_k.size(); ++i)
      if (red.k_map[i] >= 0)
        s.k.push_back({static_cast<int>(i), red.reduced->family_k[static_cast<size_t>(red.k_map[i])]});
    q = intersection_rec(s);
  }
  q = with_all_labels(std::move(q), static_cast<int>(cs.family_h.size()));
  q.provenance.kind = "outerplanar-intersection";
  return q;
}

Support outerplanar_dual_support(int n, const std::vector<std::vector<int>>& family_h) {
  auto rep = classify_axax(n, family_h);
  if (!rep.free_)
    throw precondition_error("outerplanar_dual_support: family not axax-free",
                             "{\"pair\":[" + std::to_string(rep.first) + "," + std::to_string(rep.second) +
                                 "],\"pattern\":" + pattern_json(rep.pattern) + "}");
  std::vector<std::vector<int>> singletons;
  singletons.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) singletons.push_back({v});
  auto q = outerplanar_intersection_support(CycleSystem(n, family_h, singletons));
  q.provenance.kind = "outerplanar-dual";
  return q;
}

Support outerplanar_primal_support(int n, const std::vector<std::vector<int>>& family,
                                   const Coloring& coloring) {
  auto rep = classify_axax(n, family);
  if (!rep.free_)
    throw precondition_error("outerplanar_primal_support: family not axax-free",
                             "{\"pair\":[" + std::to_string(rep.first) + "," + std::to_string(rep.second) +
                                 "],\"pattern\":" + pattern_json(rep.pattern) + "}");
  std::vector<std::vector<int>> blue_singletons;
  std::vector<int> blue;
  for (int v = 0; v < n; ++v)
    if (coloring.is_blue(v)) {
      blue.push_back(v);
      blue_singletons.push_back({v});
    }
  auto q = outerplanar_intersection_support(CycleSystem(n, blue_singletons, family));
  for (int& lab : q.labels) lab = blue[static_cast<size_t>(lab)];
  q.provenance.kind = "outerplanar-primal";
  return q;
}

// ----- outer face recovery --------------------------------------------------

namespace {

// 2-connected outerplanar block: peel the lowest-id degree-2 vertex onto the
// unique Hamiltonian cycle of the reduced block.
std::vector<int> block_cycle_order(std::vector<int> verts, std::set<std::pair<int, int>> edges) {
  if (verts.size() <= 2) return verts;
  std::map<int, std::set<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  if (verts.size() == 3) return verts;
  int peel = -1;
  for (int v : verts)
    if (adj[v].size() == 2) {
      peel = v;
      break;
    }
  if (peel < 0) throw precondition_error("host not outerplanar (no ear to peel)", "{}");
  int a = *adj[peel].begin(), b = *std::next(adj[peel].begin());
  std::vector<int> rest;
  for (int v : verts)
    if (v != peel) rest.push_back(v);
  std::set<std::pair<int, int>> rest_edges;
  for (auto [u, v] : edges)
    if (u != peel && v != peel) rest_edges.insert({u, v});
  rest_edges.insert({std::min(a, b), std::max(a, b)});
  auto order = block_cycle_order(std::move(rest), std::move(rest_edges));
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i], y = order[(i + 1) % order.size()];
    if ((x == a && y == b) || (x == b && y == a)) {
      order.insert(order.begin() + static_cast<long>(i) + 1, peel);
      return order;
    }
  }
  throw precondition_error("host not outerplanar (ear endpoints not consecutive)", "{}");
}

struct BlockDecomposition {
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  std::vector<std::vector<int>> block_vertices;
};

BlockDecomposition biconnected_blocks(const Graph& g) {
  BlockDecomposition out;
  std::vector<int> num(static_cast<size_t>(g.n), -1), low(static_cast<size_t>(g.n), 0);
  std::vector<std::pair<int, int>> stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    num[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (num[static_cast<size_t>(w)] < 0) {
        stack.push_back({v, w});
        dfs(w, v);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
        if (low[static_cast<size_t>(w)] >= num[static_cast<size_t>(v)]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(v, w)) break;
          }
          out.block_edges.push_back(std::move(block));
        }
      } else if (num[static_cast<size_t>(w)] < num[static_cast<size_t>(v)]) {
        stack.push_back({v, w});
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], num[static_cast<size_t>(w)]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (num[static_cast<size_t>(v)] < 0) dfs(v, -1);
  for (auto& block : out.block_edges) {
    std::set<int> vs;
    for (auto [u, v] : block) {
      vs.insert(u);
      vs.insert(v);
    }
    out.block_vertices.push_back({vs.begin(), vs.end()});
  }
  return out;
}

}  // namespace

std::vector<int> outer_cycle_order(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  // per-block outer cycles
  std::vector<std::vector<int>> cycles;
  for (size_t b = 0; b < blocks.block_edges.size(); ++b) {
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : blocks.block_edges[b]) es.insert({std::min(u, v), std::max(u, v)});
    cycles.push_back(block_cycle_order(blocks.block_vertices[b], std::move(es)));
  }
  // splice blocks at cut vertices: DFS over the block-cut structure
  std::vector<std::vector<int>> blocks_at(static_cast<size_t>(g.n));
  for (size_t b = 0; b < cycles.size(); ++b)
    for (int v : cycles[b]) blocks_at[static_cast<size_t>(v)].push_back(static_cast<int>(b));
  std::vector<char> block_done(cycles.size(), 0), vertex_done(static_cast<size_t>(g.n), 0);
  std::vector<int> order;
  std::function<void(int, int)> emit_block = [&](int b, int entry) {
    block_done[static_cast<size_t>(b)] = 1;
    const auto& cyc = cycles[static_cast<size_t>(b)];
    size_t at = 0;
    while (entry >= 0 && cyc[at] != entry) ++at;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int v = cyc[(at + i) % cyc.size()];
      if (!vertex_done[static_cast<size_t>(v)]) {
        vertex_done[static_cast<size_t>(v)] = 1;
        order.push_back(v);
      }
      for (int nb : blocks_at[static_cast<size_t>(v)])
        if (!block_done[static_cast<size_t>(nb)]) emit_block(nb, v);
    }
  };
  for (size_t b = 0; b < cycles.size(); ++b)
    if (!block_done[b]) emit_block(static_cast<int>(b), -1);
  for (int v = 0; v < g.n; ++v)
    if (!vertex_done[static_cast<size_t>(v)]) order.push_back(v);  // isolated vertices

  // the order must embed every edge without crossings
  std::vector<int> pos(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
  const int m = g.n;
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : g.edges) {
    int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
    if (m > 2 && ((a + 1) % m == b || (b + 1) % m == a)) continue;
    chords.push_back({std::min(a, b), std::max(a, b)});
  }
  for (size_t x = 0; x < chords.size(); ++x)
    for (size_t y = x + 1; y < chords.size(); ++y) {
      auto [a, b] = chords[x];
      auto [c, d] = chords[y];
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in && c != a && c != b && d != a && d != b)
        throw precondition_error("host not outerplanar (crossing chords in recovered order)", "{}");
    }
  return order;
}

CycleSystem project_to_cycle(const Graph& g, const SubgraphFamily& h, const SubgraphFamily& k) {
  auto order = outer_cycle_order(g);
  std::vector<int> pos(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
  auto map_family = [&](const SubgraphFamily& fam) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < fam.size(); ++i) {
      std::vector<int> m;
      for (int v : fam.member(i)) m.push_back(pos[static_cast<size_t>(v)]);
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
    }
    return out;
  };
  return CycleSystem(g.n, map_family(h), map_family(k));
}

}  // namespace supports
