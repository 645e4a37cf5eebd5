#pragma once

#include <iosfwd>
#include <string>

#include "supports/graph.hpp"
#include "supports/treedecomp.hpp"

namespace supports {

// Instance file: { "graph": {"n": int, "edges": [[u,v],...]},
//                  "coloring": ["b"|"r",...]?, "H": [[...],...], "K": [[...],...]? }
struct Instance {
  Graph graph;
  std::optional<Coloring> coloring;
  std::vector<std::vector<int>> family_h;
  std::optional<std::vector<std::vector<int>>> family_k;

  GraphSystem graph_system() const;
  IntersectionSystem intersection_system() const;
  bool has_k() const { return family_k.has_value(); }
};

Instance parse_instance(const std::string& json_text);
std::string serialize_instance(const Instance& inst);

TreeDecomposition parse_decomposition(const std::string& json_text);
std::string serialize_decomposition(const TreeDecomposition& td);

Support parse_support(const std::string& json_text);
std::string serialize_support(const Support& q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Undirected DOT output.
std::string graph_dot(const Graph& g, const std::string& name);
std::string support_dot(const Support& q, const std::string& name);

}  // namespace supports
