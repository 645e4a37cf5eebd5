// Command-line driver: build supports, generate instances, check structural
// properties, verify supports against the brute-force oracles, and run
// bound sweeps.
//
// Exit codes: 0 ok, 2 input error, 3 precondition violation (witness on
// stderr), 4 oracle failure.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supports/cyclesupport.hpp"
#include "supports/dual.hpp"
#include "supports/generators.hpp"
#include "supports/intersection.hpp"
#include "supports/io.hpp"
#include "supports/primal.hpp"
#include "supports/verify.hpp"

using nlohmann::json;
using namespace supports;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitOracle = 4;

std::string bound_string(double b) {
  if (b < 0) return "";
  if (std::isinf(b)) return "inf";
  std::ostringstream os;
  os.precision(0);
  os << std::fixed << b;
  return os.str();
}

// Instances without a K family degenerate to K = all singleton vertex sets,
// which turns the intersection build into the dual one.
std::vector<std::vector<int>> singleton_family(int n) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) out.push_back({v});
  return out;
}

IntersectionSystem intersection_input(const Instance& inst) {
  if (inst.family_k) return inst.intersection_system();
  return IntersectionSystem(inst.graph, SubgraphFamily(inst.family_h, FamilyName::H, inst.graph.n),
                            SubgraphFamily(singleton_family(inst.graph.n), FamilyName::K, inst.graph.n));
}

Support build_kind(const std::string& kind, const Instance& inst, const TreeDecomposition* td) {
  if (kind == "primal") return build_primal(inst.graph_system(), td);
  if (kind == "dual") return build_dual(inst.graph_system(), td);
  if (kind == "intersection") return build_intersection(intersection_input(inst), td);

  // outerplanar kinds: project onto the outer cycle first
  SubgraphFamily h(inst.family_h, FamilyName::H, inst.graph.n);
  SubgraphFamily k(inst.family_k.value_or(std::vector<std::vector<int>>{}), FamilyName::K, inst.graph.n);
  auto order = outer_cycle_order(inst.graph);
  std::vector<int> pos(static_cast<size_t>(inst.graph.n), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
  auto mapped = [&](const std::vector<std::vector<int>>& fam) {
    std::vector<std::vector<int>> out;
    for (const auto& m : fam) {
      std::vector<int> mm;
      for (int v : m) mm.push_back(pos[static_cast<size_t>(v)]);
      std::sort(mm.begin(), mm.end());
      out.push_back(std::move(mm));
    }
    return out;
  };
  auto h_cycle = mapped(inst.family_h);
  if (kind == "outerplanar-dual") {
    auto q = outerplanar_dual_support(inst.graph.n, h_cycle);
    return q;
  }
  if (kind == "outerplanar-primal") {
    Coloring col = inst.coloring.value_or(Coloring::all_blue(inst.graph.n));
    Coloring cycle_col;
    cycle_col.color.assign(static_cast<size_t>(inst.graph.n), Color::Red);
    for (int v = 0; v < inst.graph.n; ++v)
      if (col.is_blue(v)) cycle_col.color[static_cast<size_t>(pos[static_cast<size_t>(v)])] = Color::Blue;
    auto q = outerplanar_primal_support(inst.graph.n, h_cycle, cycle_col);
    // labels are cycle positions of blue vertices; map back to host vertex ids
    for (int& lab : q.labels) lab = order[static_cast<size_t>(lab)];
    return q;
  }
  if (kind == "outerplanar-intersection") {
    auto k_family = inst.family_k ? mapped(*inst.family_k) : singleton_family(inst.graph.n);
    return outerplanar_intersection_support(CycleSystem(inst.graph.n, h_cycle, k_family));
  }
  throw std::invalid_argument("unknown kind " + kind);
}

int run_oracle(const std::string& kind, const Instance& inst, const Support& q) {
  SupportCheck check;
  if (kind == "primal" || kind == "outerplanar-primal")
    check = check_support(SupportKind::Primal, inst.graph_system(), q);
  else if (kind == "dual" || kind == "outerplanar-dual")
    check = check_support(SupportKind::Dual, inst.graph_system(), q);
  else
    check = check_support(intersection_input(inst), q);
  if (!check.ok) {
    json w;
    w["oracle"] = "support-validity";
    w["hyperedge"] = check.hyperedge;
    w["components"] = check.components;
    std::cerr << w.dump() << "\n";
    return kExitOracle;
  }
  if (kind.rfind("outerplanar", 0) == 0) {
    Graph sg(q.size(), {q.edges.begin(), q.edges.end()});
    if (!is_outerplanar(sg)) {
      std::cerr << R"({"oracle":"outerplanarity","holds":false})" << "\n";
      return kExitOracle;
    }
  }
  return kExitOk;
}

// audit dump of the pushing stage the dual/intersection pipelines would run
json ledger_json(const Instance& inst, const std::string& kind, const TreeDecomposition* provided) {
  TreeDecomposition td =
      provided ? *provided
               : build_decomposition(inst.graph,
                                     inst.graph.n <= 20 ? BuildMode::ExactSmall : BuildMode::MinFillHeuristic);
  auto rooted = binarize_and_root(td);
  if (kind == "intersection") rooted = make_k_easy(intersection_input(inst), rooted);
  Graph cc = chordal_complete(inst.graph, rooted);
  auto mr = containment_maximal(SubgraphFamily(inst.family_h, FamilyName::H, inst.graph.n));
  auto ledger = push_sparsify(cc, mr.family, rooted);
  json out;
  out["entries"] = json::array();
  for (const auto& e : ledger.entries) {
    json entry;
    entry["pushed"] = mr.kept[static_cast<size_t>(e.pushed)];
    entry["pusher"] = mr.kept[static_cast<size_t>(e.pusher)];
    entry["adhesion_edge"] = json::array({e.adhesion_edge.first, e.adhesion_edge.second});
    entry["connecting_edge"] = json::array({e.connecting_edge.first, e.connecting_edge.second});
    entry["before"] = e.before;
    entry["after"] = e.after;
    entry["pusher_at_push"] = e.pusher_at_push;
    out["entries"].push_back(entry);
  }
  json uniq = json::array();
  for (size_t i = 0; i < ledger.unique_map.size(); ++i)
    uniq.push_back(json::array({mr.kept[i], mr.kept[static_cast<size_t>(ledger.unique_map[i])]}));
  out["unique_map"] = uniq;
  out["final_family"] = ledger.final_family.members;
  return out;
}

int cmd_build(const std::string& kind, const std::string& input, const std::string& td_file,
              const std::string& out_file, const std::string& dot_file, const std::string& ledger_file,
              bool verify_flag) {
  Instance inst = parse_instance(read_file(input));
  std::optional<TreeDecomposition> td;
  if (!td_file.empty()) {
    td = parse_decomposition(read_file(td_file));
    auto rep = validate(inst.graph, *td);
    if (!rep.ok) {
      std::cerr << json{{"witness", "provided decomposition invalid: " + rep.violation}}.dump() << "\n";
      return kExitPrecondition;
    }
  }
  Support q = build_kind(kind, inst, td ? &*td : nullptr);
  if (!out_file.empty()) write_file(out_file, serialize_support(q));
  if (!dot_file.empty()) write_file(dot_file, support_dot(q, "support"));
  if (!ledger_file.empty()) {
    if (kind != "dual" && kind != "intersection")
      throw std::invalid_argument("--ledger applies to dual and intersection builds");
    write_file(ledger_file, ledger_json(inst, kind, td ? &*td : nullptr).dump(2) + "\n");
  }
  std::cout << "kind=" << kind << " labels=" << q.size() << " edges=" << q.edges.size()
            << " width_achieved=" << q.provenance.width_achieved
            << " width_bound=" << bound_string(q.provenance.width_bound_claimed) << "\n";
  if (verify_flag) return run_oracle(kind, inst, q);
  return kExitOk;
}

int cmd_gen(const std::string& family, int m, int t, int n, int members, int k_members, double blue_fraction,
            unsigned long long seed, const std::string& out_file, const std::string& dot_file) {
  Instance inst;
  if (family == "primal-lb" || family == "dual-lb") {
    auto lb = family == "primal-lb" ? gen_primal_lb(m) : gen_dual_lb(m);
    inst.graph = lb.system.graph;
    inst.coloring = lb.system.coloring;
    inst.family_h = lb.system.family_h.members;
  } else if (family == "clique-random") {
    CliqueSystemParams p;
    p.width = t;
    p.member_count = members;
    p.k_member_count = k_members;
    p.blue_fraction = blue_fraction;
    p.seed = seed;
    p.bag_count = std::max(2, n > 0 ? n / std::max(1, t + 1) : 12);
    if (k_members > 0) {
      auto gi = gen_clique_intersection(p);
      inst.graph = gi.system.graph;
      inst.family_h = gi.system.family_h.members;
      inst.family_k = gi.system.family_k.members;
    } else {
      auto gs = gen_clique_system(p);
      inst.graph = gs.system.graph;
      inst.coloring = gs.system.coloring;
      inst.family_h = gs.system.family_h.members;
    }
  } else if (family == "outerplanar-random") {
    OuterplanarParams p;
    p.n = n;
    p.h_count = members;
    p.k_count = k_members > 0 ? k_members : members;
    p.seed = seed;
    auto gi = gen_outerplanar_system(p);
    if (gi.retry_exhausted) std::cerr << R"({"warning":"retry budget exhausted"})" << "\n";
    inst.graph = gi.system.graph;
    inst.family_h = gi.system.family_h.members;
    inst.family_k = gi.system.family_k.members;
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  std::string text = serialize_instance(inst);
  if (!out_file.empty())
    write_file(out_file, text);
  else
    std::cout << text;
  if (!dot_file.empty()) write_file(dot_file, graph_dot(inst.graph, "instance"));
  return kExitOk;
}

int cmd_check(const std::string& input, const std::string& property, const std::string& td_file) {
  Instance inst = parse_instance(read_file(input));
  json verdict;
  bool holds = false;
  if (property == "nonpiercing") {
    auto rep = is_non_piercing(inst.graph, SubgraphFamily(inst.family_h, FamilyName::H, inst.graph.n));
    holds = rep.ok;
    if (!holds) verdict["witness"] = json::array({rep.first, rep.second});
  } else if (property == "axax" || property == "abab") {
    auto order = outer_cycle_order(inst.graph);
    std::vector<int> pos(static_cast<size_t>(inst.graph.n));
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> fam;
    for (const auto& mem : inst.family_h) {
      std::vector<int> m;
      for (int v : mem) m.push_back(pos[static_cast<size_t>(v)]);
      std::sort(m.begin(), m.end());
      fam.push_back(std::move(m));
    }
    auto rep = property == "axax" ? classify_axax(inst.graph.n, fam) : classify_abab(inst.graph.n, fam);
    holds = rep.free_;
    if (!holds) {
      verdict["pair"] = json::array({rep.first, rep.second});
      verdict["pattern"] = rep.pattern;
    }
  } else if (property == "strong-axax") {
    if (!inst.family_k) throw std::invalid_argument("strong-axax needs a K family");
    auto cs = project_to_cycle(inst.graph, SubgraphFamily(inst.family_h, FamilyName::H, inst.graph.n),
                               SubgraphFamily(*inst.family_k, FamilyName::K, inst.graph.n));
    auto rep = classify_strong_axax(cs);
    holds = rep.free_;
    if (!holds) {
      verdict["clause"] = rep.failed == StrongAxaxReport::Clause::HAxax         ? "axax-H"
                          : rep.failed == StrongAxaxReport::Clause::KAxax       ? "axax-K"
                                                                                : "intersection-property";
      verdict["pair"] = json::array({rep.h, rep.k});
      verdict["pattern"] = rep.pattern;
    }
  } else if (property == "easy" || property == "k-easy") {
    TreeDecomposition td = td_file.empty()
                               ? binarize_and_root(build_decomposition(
                                     inst.graph, inst.graph.n <= 20 ? BuildMode::ExactSmall
                                                                    : BuildMode::MinFillHeuristic))
                               : parse_decomposition(read_file(td_file));
    if (property == "easy") {
      auto rep = is_easy(inst.graph_system(), td);
      holds = rep.easy;
      if (!holds) {
        verdict["member"] = rep.witness_member;
        verdict["adhesion"] = rep.witness_adhesion;
      }
    } else {
      auto rep = is_k_easy(inst.intersection_system(), td);
      holds = rep.easy;
      if (!holds) {
        verdict["k"] = rep.witness_k;
        verdict["adhesion"] = rep.witness_adhesion;
      }
    }
  } else if (property == "outerplanar") {
    holds = is_outerplanar(inst.graph);
  } else if (property == "exact-treewidth") {
    int tw = exact_treewidth(inst.graph);
    std::cout << "exact-treewidth " << tw << "\n";
    return kExitOk;
  } else {
    throw std::invalid_argument("unknown property " + property);
  }
  std::cout << property << (holds ? " holds" : " fails") << "\n";
  if (!holds) std::cerr << verdict.dump() << "\n";
  return holds ? kExitOk : kExitPrecondition;
}

int cmd_verify(const std::string& kind, const std::string& input, const std::string& support_file) {
  Instance inst = parse_instance(read_file(input));
  Support q = parse_support(read_file(support_file));
  int rc = run_oracle(kind, inst, q);
  std::cout << "verify " << kind << (rc == kExitOk ? " ok" : " FAILED") << "\n";
  return rc;
}

struct SweepRow {
  std::string kind;
  int t = 0, n = 0, h = 0, k = 0;
  int width_achieved = 0;
  double width_bound = 0;
  bool oracle_pass = false;
  long long wall_ms = 0;
};

int cmd_sweep(const std::string& kind, std::vector<int> t_values, int seeds, int members, int size,
              const std::string& out_file) {
  std::vector<SweepRow> rows;
  bool all_ok = true;
  for (int t : t_values) {
    for (int seed = 0; seed < seeds; ++seed) {
      SweepRow row;
      row.kind = kind;
      row.t = t;
      auto start = std::chrono::steady_clock::now();
      if (kind == "outerplanar") {
        OuterplanarParams p;
        p.n = size > 0 ? size : 16;
        p.h_count = members;
        p.k_count = members;
        p.seed = static_cast<unsigned long long>(seed);
        auto gi = gen_outerplanar_system(p);
        auto cs = project_to_cycle(gi.system.graph, gi.system.family_h, gi.system.family_k);
        auto q = outerplanar_intersection_support(cs);
        row.n = gi.system.graph.n;
        row.h = gi.system.family_h.size();
        row.k = gi.system.family_k.size();
        row.width_achieved = q.provenance.width_achieved;
        row.width_bound = 2;  // outerplanar supports have treewidth at most 2
        Graph sg(q.size(), {q.edges.begin(), q.edges.end()});
        row.oracle_pass = check_support(gi.system, q).ok && is_outerplanar(sg);
      } else {
        CliqueSystemParams p;
        p.width = t;
        p.member_count = members;
        p.k_member_count = members;
        p.blue_fraction = 0.5;
        p.seed = static_cast<unsigned long long>(seed);
        p.bag_count = size > 0 ? std::max(2, size / (t + 1)) : 12;
        if (kind == "intersection") {
          auto gi = gen_clique_intersection(p);
          auto q = intersection_support(gi.system, gi.host_decomposition);
          row.n = gi.system.graph.n;
          row.h = gi.system.family_h.size();
          row.k = gi.system.family_k.size();
          row.width_achieved = q.provenance.width_achieved;
          row.width_bound = q.provenance.width_bound_claimed;
          row.oracle_pass = check_support(gi.system, q).ok;
        } else {
          auto gs = gen_clique_system(p);
          Support q = kind == "primal" ? build_primal(gs.system, &gs.host_decomposition)
                                       : dual_support(gs.system, gs.host_decomposition);
          row.n = gs.system.graph.n;
          row.h = gs.system.family_h.size();
          row.width_achieved = q.provenance.width_achieved;
          row.width_bound = q.provenance.width_bound_claimed;
          row.oracle_pass =
              check_support(kind == "primal" ? SupportKind::Primal : SupportKind::Dual, gs.system, q).ok;
        }
      }
      row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                          start)
                        .count();
      bool bound_ok = row.width_achieved <= row.width_bound;
      if (!row.oracle_pass || !bound_ok) all_ok = false;
      rows.push_back(row);
    }
  }
  std::ostringstream csv;
  csv << "kind,t,n,H,K,width_achieved,width_bound,oracle_pass,wall_ms\n";
  for (const auto& r : rows)
    csv << r.kind << "," << r.t << "," << r.n << "," << r.h << "," << r.k << "," << r.width_achieved << ","
        << bound_string(r.width_bound) << "," << (r.oracle_pass ? 1 : 0) << "," << r.wall_ms << "\n";
  if (!out_file.empty())
    write_file(out_file, csv.str());
  else
    std::cout << csv.str();
  std::cout << "sweep " << kind << " cells=" << rows.size() << (all_ok ? " all-ok" : " FAILURES") << "\n";
  return all_ok ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse support construction for non-piercing graph systems"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "build a support for an instance");
  std::string build_kind_arg, build_input, build_td, build_out, build_dot, build_ledger;
  bool build_verify = false;
  build->add_option("--kind", build_kind_arg, "primal|dual|intersection|outerplanar-*")->required();
  build->add_option("--input", build_input, "instance JSON")->required();
  build->add_option("--td", build_td, "decomposition JSON (built when absent)");
  build->add_option("--out", build_out, "support JSON output");
  build->add_option("--dot", build_dot, "DOT output");
  build->add_option("--ledger", build_ledger, "push-ledger JSON dump (dual/intersection)");
  build->add_flag("--verify", build_verify, "run the matching oracle");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gen_family, gen_out, gen_dot;
  int gen_m = 4, gen_t = 2, gen_n = 12, gen_members = 8, gen_k_members = 0;
  double gen_blue = 1.0;
  unsigned long long gen_seed = 0;
  gen->add_option("--family", gen_family, "primal-lb|dual-lb|clique-random|outerplanar-random")->required();
  gen->add_option("--m", gen_m, "lower-bound parameter");
  gen->add_option("--t", gen_t, "host treewidth");
  gen->add_option("--n", gen_n, "host size");
  gen->add_option("--members", gen_members, "family size");
  gen->add_option("--k-members", gen_k_members, "K family size (0: none)");
  gen->add_option("--blue-fraction", gen_blue, "fraction of blue vertices");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output file (stdout when absent)");
  gen->add_option("--dot", gen_dot, "DOT output");

  auto* check = app.add_subcommand("check", "check a structural property");
  std::string check_input, check_property, check_td;
  check->add_option("--input", check_input)->required();
  check->add_option("--property", check_property,
                    "nonpiercing|axax|abab|strong-axax|easy|k-easy|outerplanar|exact-treewidth")
      ->required();
  check->add_option("--td", check_td, "decomposition JSON");

  auto* verify = app.add_subcommand("verify", "verify a support file against an instance");
  std::string verify_kind, verify_input, verify_support;
  verify->add_option("--kind", verify_kind)->required();
  verify->add_option("--input", verify_input)->required();
  verify->add_option("--support", verify_support)->required();

  auto* sweep = app.add_subcommand("sweep", "bound sweep over random instances");
  std::string sweep_kind, sweep_out;
  std::vector<int> sweep_t{2};
  int sweep_seeds = 10, sweep_members = 20, sweep_size = 0;
  sweep->add_option("--kind", sweep_kind, "primal|dual|intersection|outerplanar")->required();
  sweep->add_option("--t", sweep_t, "treewidth values");
  sweep->add_option("--seeds", sweep_seeds, "seeds per cell");
  sweep->add_option("--members", sweep_members, "family size");
  sweep->add_option("--size", sweep_size, "host size hint");
  sweep->add_option("--out", sweep_out, "CSV output (stdout when absent)");

  try {
    app.parse(argc, argv);
    if (*build)
      return cmd_build(build_kind_arg, build_input, build_td, build_out, build_dot, build_ledger,
                       build_verify);
    if (*gen)
      return cmd_gen(gen_family, gen_m, gen_t, gen_n, gen_members, gen_k_members, gen_blue, gen_seed,
                     gen_out, gen_dot);
    if (*check) return cmd_check(check_input, check_property, check_td);
    if (*verify) return cmd_verify(verify_kind, verify_input, verify_support);
    if (*sweep) return cmd_sweep(sweep_kind, sweep_t, sweep_seeds, sweep_members, sweep_size, sweep_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  } catch (const precondition_error& e) {
    std::cerr << e.witness << "\n";
    std::cout << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return kExitInput;
  }
  return kExitInput;
}
