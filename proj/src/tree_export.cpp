#include "fibtree/tree_export.hpp"

#include <sstream>

namespace fibtree {

namespace {

std::string node_name(const ExpandedTree& g, VertexId v) {
  const int n = g.core_size();
  return v < n ? "v" + std::to_string(v) : "z" + std::to_string(v - n);
}

}  // namespace

std::string export_dot(const ExpandedTree& g) {
  std::ostringstream out;
  out << "graph expanded_tree {\n";
  for (VertexId v = 0; v < g.graph().vertex_count(); ++v) {
    out << "  " << node_name(g, v) << ";\n";
  }
  for (const auto& [u, v] : g.graph().edges()) {
    out << "  " << node_name(g, u) << " -- " << node_name(g, v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json export_json(const ExpandedTree& g) {
  nlohmann::ordered_json j;
  j["n"] = g.graph().vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.graph().edges()) {
    edges.push_back(nlohmann::ordered_json::array({u, v}));
  }
  j["edges"] = edges;
  auto core = nlohmann::ordered_json::array();
  auto leaves = nlohmann::ordered_json::array();
  for (int i = 0; i < g.core_size(); ++i) {
    core.push_back(g.core_vertex(i));
    leaves.push_back(g.leaf_of(i));
  }
  j["core"] = core;
  j["leaves"] = leaves;
  return j;
}

}  // namespace fibtree
