#include "fibtree/tree.hpp"
#include "fibtree/tree_export.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace fibtree;

namespace {

// Counts DOT statement lines: "v0;" style node lines and "a -- b;" edges.
std::pair<int, int> dot_counts(const std::string& dot) {
  std::istringstream in(dot);
  std::string line;
  int nodes = 0, edges = 0;
  while (std::getline(in, line)) {
    if (line.find(';') == std::string::npos) continue;
    (line.find("--") != std::string::npos ? edges : nodes)++;
  }
  return {nodes, edges};
}

}  // namespace

TEST_CASE("path_tree shapes") {
  CHECK(path_tree(1).vertex_count() == 1);
  CHECK(path_tree(1).edge_count() == 0);
  CHECK(path_tree(2).edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
  const Tree p5 = path_tree(5);
  CHECK(p5.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(path_tree(0), std::invalid_argument);
}

TEST_CASE("from_edges rejects non-trees") {
  using E = std::vector<std::pair<VertexId, VertexId>>;
  CHECK_THROWS_AS(Tree::from_edges(2, E{{0, 0}, {0, 1}}), std::invalid_argument);  // self-loop
  CHECK_THROWS_AS(Tree::from_edges(3, E{{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Tree::from_edges(2, E{{0, 2}}), std::invalid_argument);          // bad id
  CHECK_THROWS_AS(Tree::from_edges(3, E{{0, 1}}), std::invalid_argument);          // too few
  CHECK_THROWS_AS(Tree::from_edges(4, E{{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges(0, E{}), std::invalid_argument);
  // 4 vertices, 3 edges, but one is an isolated pair + triangle is impossible
  // for trees; disconnectedness with the right edge count:
  CHECK_THROWS_AS(Tree::from_edges(6, E{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}}),
                  std::invalid_argument);
}

TEST_CASE("degree and is_leaf") {
  const Tree p5 = path_tree(5);
  CHECK(degree(p5, 0) == 1);
  CHECK(degree(p5, 2) == 2);
  CHECK(is_leaf(path_tree(2), 0));
  const ExpandedTree x3 = expanded_path(3);
  CHECK(degree(x3.graph(), x3.core_vertex(1)) == 3);
  CHECK(is_leaf(x3.graph(), x3.leaf_of(1)));
  CHECK_FALSE(is_leaf(x3.graph(), x3.core_vertex(1)));
  CHECK_THROWS_AS(degree(p5, 5), std::out_of_range);
  CHECK_THROWS_AS(degree(p5, -1), std::out_of_range);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    const Tree t = random_tree(25, seed);
    int sum = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v) sum += degree(t, v);
    CHECK(sum == 2 * t.edge_count());
  }
}

TEST_CASE("expansion attaches one leaf per core vertex") {
  const ExpandedTree x1 = expanded_path(1);
  CHECK(x1.graph().vertex_count() == 2);
  CHECK(x1.graph().edge_count() == 1);

  const ExpandedTree x3 = expanded_path(3);
  CHECK(x3.graph().vertex_count() == 6);
  CHECK(degree(x3.graph(), 0) == 2);
  CHECK(degree(x3.graph(), 1) == 3);
  CHECK(degree(x3.graph(), 2) == 2);
  for (int i = 0; i < 3; ++i) CHECK(degree(x3.graph(), x3.leaf_of(i)) == 1);

  const ExpandedTree x5 = expanded_path(5);
  CHECK(x5.graph().vertex_count() == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(is_leaf(x5.graph(), x5.leaf_of(i)));
    CHECK(x5.graph().has_edge(x5.core_vertex(i), x5.leaf_of(i)));
  }
  for (int i = 0; i + 1 < 5; ++i) CHECK(x5.graph().has_edge(i, i + 1));  // core path intact

  for (int n = 1; n <= 40; ++n) {
    const ExpandedTree x = expanded_path(n);
    CHECK(x.graph().vertex_count() == 2 * n);
    CHECK(x.graph().edge_count() == 2 * n - 1);
  }
}

TEST_CASE("expansion of arbitrary cores") {
  const Tree star = star_tree(4);
  const ExpandedTree xs(star);
  CHECK(xs.graph().vertex_count() == 10);
  CHECK(degree(xs.graph(), 0) == 5);  // 4 star leaves + 1 attached leaf
  CHECK_FALSE(xs.core_is_ordered_path());
  CHECK(expanded_path(2).core_is_ordered_path());
  CHECK(expanded_path(1).core_is_ordered_path());
}

TEST_CASE("central positions are the interior of the core path") {
  CHECK(expanded_path(5).central_positions() == std::vector<int>{1, 2, 3});
  CHECK(expanded_path(3).central_positions() == std::vector<int>{1});
  CHECK(expanded_path(2).central_positions().empty());
  CHECK(expanded_path(1).central_positions().empty());
  CHECK_THROWS_AS(expanded_path(3).core_vertex(3), std::out_of_range);
  CHECK_THROWS_AS(expanded_path(3).leaf_of(-1), std::out_of_range);
}

TEST_CASE("export_dot is deterministic and countable") {
  const ExpandedTree x1 = expanded_path(1);
  const auto [n1, e1] = dot_counts(export_dot(x1));
  CHECK(n1 == 2);
  CHECK(e1 == 1);

  const ExpandedTree x3 = expanded_path(3);
  const std::string dot = export_dot(x3);
  const auto [n3, e3] = dot_counts(dot);
  CHECK(n3 == 6);
  CHECK(e3 == 5);
  CHECK(dot == export_dot(x3));  // byte-identical
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("v0 -- z0") != std::string::npos);
  CHECK(dot.find('\r') == std::string::npos);  // LF only

  // round-trip counts for a spread of sizes
  for (int n : {2, 4, 7, 12}) {
    const ExpandedTree x = expanded_path(n);
    const auto [nodes, edges] = dot_counts(export_dot(x));
    CHECK(nodes == x.graph().vertex_count());
    CHECK(edges == x.graph().edge_count());
  }
}

TEST_CASE("export_json carries the full structure") {
  const auto j = export_json(expanded_path(2));
  CHECK(j.at("n") == 4);
  CHECK(j.at("core") == nlohmann::ordered_json::array({0, 1}));
  CHECK(j.at("leaves") == nlohmann::ordered_json::array({2, 3}));
  const auto& edges = j.at("edges");
  CHECK(edges.size() == 3);
  // sorted lexicographically
  for (std::size_t t = 1; t < edges.size(); ++t) {
    const auto& prev = edges[t - 1];
    const auto& cur = edges[t];
    const bool ordered = prev[0] < cur[0] || (prev[0] == cur[0] && prev[1] < cur[1]);
    CHECK(ordered);
  }
}

TEST_CASE("random_tree is deterministic and always a tree") {
  CHECK(random_tree(1, 5).vertex_count() == 1);
  CHECK(random_tree(2, 17).edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
  CHECK(random_tree(9, 4).edges() == random_tree(9, 4).edges());
  // construction validates the invariants; survive a large instance
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
    const Tree t = random_tree(1000, seed);
    CHECK(t.vertex_count() == 1000);
    CHECK(t.edge_count() == 999);
  }
  CHECK_THROWS_AS(random_tree(0, 1), std::invalid_argument);
}

TEST_CASE("neighbors are sorted and has_edge is symmetric") {
  const Tree t = random_tree(40, 8);
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto& nb = t.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (VertexId u : nb) {
      CHECK(t.has_edge(v, u));
      CHECK(t.has_edge(u, v));
    }
  }
  CHECK_FALSE(path_tree(4).has_edge(0, 2));
}
