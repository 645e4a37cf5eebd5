#include "supports/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace supports {

using nlohmann::json;

GraphSystem Instance::graph_system() const {
  Coloring col = coloring.value_or(Coloring::all_blue(graph.n));
  return GraphSystem(graph, col, SubgraphFamily(family_h, FamilyName::H, graph.n));
}

IntersectionSystem Instance::intersection_system() const {
  if (!family_k) throw std::invalid_argument("instance has no K family");
  return IntersectionSystem(graph, SubgraphFamily(family_h, FamilyName::H, graph.n),
                            SubgraphFamily(*family_k, FamilyName::K, graph.n));
}

namespace {

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, true);
  return j;
}

std::vector<std::pair<int, int>> edge_list(const json& arr) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge is not a pair");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

std::vector<std::vector<int>> int_lists(const json& arr) {
  std::vector<std::vector<int>> out;
  for (const auto& m : arr) out.push_back(m.get<std::vector<int>>());
  return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
  json arr = json::array();
  for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j = parse_checked(json_text);
  Instance inst;
  inst.graph = Graph(j.at("graph").at("n").get<int>(), edge_list(j.at("graph").at("edges")));
  if (j.contains("coloring") && !j["coloring"].is_null()) {
    Coloring col;
    for (const auto& c : j["coloring"]) {
      std::string s = c.get<std::string>();
      if (s != "b" && s != "r") throw std::invalid_argument("coloring entries must be \"b\" or \"r\"");
      col.color.push_back(s == "b" ? Color::Blue : Color::Red);
    }
    if (col.size() != inst.graph.n) throw std::invalid_argument("coloring length mismatch");
    inst.coloring = std::move(col);
  }
  inst.family_h = int_lists(j.at("H"));
  if (j.contains("K") && !j["K"].is_null()) inst.family_k = int_lists(j["K"]);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["graph"]["n"] = inst.graph.n;
  j["graph"]["edges"] = edges_json(inst.graph.edges);
  if (inst.coloring) {
    json col = json::array();
    for (int v = 0; v < inst.coloring->size(); ++v) col.push_back(inst.coloring->is_blue(v) ? "b" : "r");
    j["coloring"] = col;
  }
  j["H"] = inst.family_h;
  if (inst.family_k) j["K"] = *inst.family_k;
  return j.dump(2) + "\n";
}

TreeDecomposition parse_decomposition(const std::string& json_text) {
  json j = parse_checked(json_text);
  TreeDecomposition td;
  std::map<int, std::vector<int>> bags_by_id;
  for (const auto& node : j.at("nodes")) bags_by_id[node.at("id").get<int>()] = node.at("bag").get<std::vector<int>>();
  int expected = 0;
  for (auto& [id, bag] : bags_by_id) {
    if (id != expected++) throw std::invalid_argument("node ids must be dense 0..k-1");
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
  }
  for (const auto& e : j.at("tree_edges")) td.tree_edges.push_back({e[0].get<int>(), e[1].get<int>()});
  if (j.contains("root") && !j["root"].is_null()) td.root = j["root"].get<int>();
  return td;
}

std::string serialize_decomposition(const TreeDecomposition& td) {
  json j;
  j["root"] = td.root ? json(*td.root) : json(nullptr);
  json nodes = json::array();
  for (int x = 0; x < td.node_count(); ++x) {
    json node;
    node["id"] = x;
    node["bag"] = td.bags[static_cast<size_t>(x)];
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  json te = json::array();
  for (auto [x, y] : td.tree_edges) te.push_back(json::array({x, y}));
  j["tree_edges"] = te;
  return j.dump(2) + "\n";
}

Support parse_support(const std::string& json_text) {
  json j = parse_checked(json_text);
  Support q;
  q.labels = j.at("labels").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) q.add_edge(e[0].get<int>(), e[1].get<int>());
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    if (p.contains("kind")) q.provenance.kind = p["kind"].get<std::string>();
    if (p.contains("width_achieved") && !p["width_achieved"].is_null())
      q.provenance.width_achieved = p["width_achieved"].get<int>();
    if (p.contains("width_bound_claimed") && !p["width_bound_claimed"].is_null()) {
      if (p["width_bound_claimed"].is_string())
        q.provenance.width_bound_claimed = std::numeric_limits<double>::infinity();
      else
        q.provenance.width_bound_claimed = p["width_bound_claimed"].get<double>();
    }
    if (p.contains("embedding") && !p["embedding"].is_null())
      q.provenance.embedding = p["embedding"].get<std::vector<int>>();
  }
  return q;
}

std::string serialize_support(const Support& q) {
  json j;
  j["labels"] = q.labels;
  json es = json::array();
  for (auto [a, b] : q.edges) es.push_back(json::array({a, b}));
  j["edges"] = es;
  json p;
  p["kind"] = q.provenance.kind;
  p["width_achieved"] = q.provenance.width_achieved < 0 ? json(nullptr) : json(q.provenance.width_achieved);
  if (q.provenance.width_bound_claimed < 0)
    p["width_bound_claimed"] = nullptr;
  else if (std::isinf(q.provenance.width_bound_claimed))
    p["width_bound_claimed"] = "inf";
  else
    p["width_bound_claimed"] = q.provenance.width_bound_claimed;
  if (q.provenance.embedding) p["embedding"] = *q.provenance.embedding;
  j["provenance"] = p;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

std::string graph_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string support_dot(const Support& q, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < q.size(); ++i)
    os << "  n" << i << " [label=\"" << q.labels[static_cast<size_t>(i)] << "\"];\n";
  for (auto [a, b] : q.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace supports
