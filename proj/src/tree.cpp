#include "fibtree/tree.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace fibtree {

Tree Tree::from_edges(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges) {
  if (vertex_count < 1) {
    throw std::invalid_argument("tree needs at least one vertex");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint outside [0, " + std::to_string(vertex_count) +
                                  ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw std::invalid_argument("a tree on " + std::to_string(vertex_count) + " vertices has " +
                                std::to_string(vertex_count - 1) + " edges, got " +
                                std::to_string(edges.size()));
  }

  Tree t;
  t.vertex_count_ = vertex_count;
  t.edges_ = std::move(edges);
  t.adjacency_.assign(vertex_count, {});
  for (const auto& [u, v] : t.edges_) {
    t.adjacency_[u].push_back(v);
    t.adjacency_[v].push_back(u);
  }
  for (auto& adj : t.adjacency_) std::sort(adj.begin(), adj.end());

  // connectivity; with n-1 edges this also rules out cycles
  std::vector<char> seen(vertex_count, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : t.adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != vertex_count) {
    throw std::invalid_argument("edge set is not connected");
  }
  return t;
}

const std::vector<VertexId>& Tree::neighbors(VertexId x) const {
  require_valid(x);
  return adjacency_[x];
}

bool Tree::has_edge(VertexId x, VertexId y) const {
  require_valid(x);
  require_valid(y);
  const auto& adj = adjacency_[x];
  return std::binary_search(adj.begin(), adj.end(), y);
}

void Tree::require_valid(VertexId x) const {
  if (x < 0 || x >= vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(x) + " outside [0, " +
                            std::to_string(vertex_count_) + ")");
  }
}

int degree(const Tree& g, VertexId x) { return static_cast<int>(g.neighbors(x).size()); }

bool is_leaf(const Tree& g, VertexId x) { return degree(g, x) == 1; }

Tree path_tree(int n) {
  if (n < 1) {
    throw std::invalid_argument("path_tree needs n >= 1");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, std::move(edges));
}

Tree star_tree(int leaves) {
  if (leaves < 0) {
    throw std::invalid_argument("star_tree needs a non-negative leaf count");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(leaves);
  for (VertexId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(leaves + 1, std::move(edges));
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_tree needs n >= 1");
  }
  if (n == 1) return Tree::from_edges(1, {});
  if (n == 2) return Tree::from_edges(2, {{0, 1}});

  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (int& v : prufer) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

  std::vector<int> deg(n, 1);
  for (int v : prufer) ++deg[v];

  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (int v : prufer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Tree::from_edges(n, std::move(edges));
}

namespace {

Tree build_expanded_graph(const Tree& core) {
  const int n = core.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> edges = core.edges();
  edges.reserve(edges.size() + n);
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Tree::from_edges(2 * n, std::move(edges));
}

bool ordered_path(const Tree& core) {
  for (VertexId i = 0; i + 1 < core.vertex_count(); ++i) {
    if (!core.has_edge(i, i + 1)) return false;
  }
  return true;
}

}  // namespace

ExpandedTree::ExpandedTree(const Tree& core)
    : graph_(build_expanded_graph(core)),
      core_size_(core.vertex_count()),
      core_is_ordered_path_(ordered_path(core)) {}

VertexId ExpandedTree::core_vertex(int i) const {
  if (i < 0 || i >= core_size_) {
    throw std::out_of_range("core position " + std::to_string(i) + " outside [0, " +
                            std::to_string(core_size_) + ")");
  }
  return i;
}

VertexId ExpandedTree::leaf_of(int i) const { return core_vertex(i) + core_size_; }

std::vector<int> ExpandedTree::central_positions() const {
  std::vector<int> out;
  for (int i = 1; i + 1 < core_size_; ++i) out.push_back(i);
  return out;
}

ExpandedTree expanded_path(int n) { return ExpandedTree(path_tree(n)); }

}  // namespace fibtree
