#ifndef FIBTREE_TREE_HPP
#define FIBTREE_TREE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace fibtree {

// Dense contiguous vertex identifier within one graph.
using VertexId = int;

// An immutable tree on vertices 0..n-1. Construction validates the tree
// invariants (simple, connected, exactly n-1 edges, hence acyclic), so a
// Tree value is a tree by construction.
class Tree {
 public:
  // Throws std::invalid_argument on self-loops, duplicate edges, vertex ids
  // outside [0, n), wrong edge count, or a disconnected edge set.
  static Tree from_edges(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges normalized to (min, max) and sorted lexicographically.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  // Sorted ascending.
  const std::vector<VertexId>& neighbors(VertexId x) const;

  bool has_edge(VertexId x, VertexId y) const;

  // Throws std::out_of_range for an id outside [0, vertex_count).
  void require_valid(VertexId x) const;

 private:
  Tree() = default;

  int vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

int degree(const Tree& g, VertexId x);
bool is_leaf(const Tree& g, VertexId x);

// The path 0-1-...-(n-1). Throws std::invalid_argument for n < 1.
Tree path_tree(int n);

// The star with the given number of pendant leaves around vertex 0.
Tree star_tree(int leaves);

// Uniformly random labeled tree: a seeded Prufer sequence, decoded
// deterministically. Same (n, seed) always yields the same edge set.
Tree random_tree(int n, std::uint64_t seed);

// A core tree with one new pendant leaf attached to each of its vertices.
// Core vertices keep their ids 0..n-1; the leaf attached to core vertex i
// gets id n+i.
class ExpandedTree {
 public:
  explicit ExpandedTree(const Tree& core);

  const Tree& graph() const { return graph_; }
  int core_size() const { return core_size_; }

  // Core position i in [0, core_size).
  VertexId core_vertex(int i) const;
  // The pendant leaf attached to core position i.
  VertexId leaf_of(int i) const;

  // True when the core is the path 0-1-...-(n-1) in id order, the canonical
  // construction the per-position counting operations require.
  bool core_is_ordered_path() const { return core_is_ordered_path_; }

  // Central positions 1..n-2 of an ordered-path core; empty for n <= 2.
  std::vector<int> central_positions() const;

 private:
  Tree graph_;
  int core_size_ = 0;
  bool core_is_ordered_path_ = false;
};

// expand(path_tree(n)), the canonical construction.
ExpandedTree expanded_path(int n);

}  // namespace fibtree

#endif
