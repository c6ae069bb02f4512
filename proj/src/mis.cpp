#include "fibtree/mis.hpp"

#include "fibtree/fib_sequence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fibtree {

namespace {

void require_valid_all(const Tree& g, const std::vector<VertexId>& s) {
  for (VertexId v : s) g.require_valid(v);
}

}  // namespace

bool is_independent(const Tree& g, const std::vector<VertexId>& s) {
  require_valid_all(g, s);
  std::vector<char> in_set(g.vertex_count(), 0);
  for (VertexId v : s) in_set[v] = 1;
  for (const auto& [u, v] : g.edges()) {
    if (in_set[u] && in_set[v]) return false;
  }
  return true;
}

bool is_maximal_independent(const Tree& g, const std::vector<VertexId>& s) {
  if (!is_independent(g, s)) return false;
  std::vector<char> in_set(g.vertex_count(), 0);
  for (VertexId v : s) in_set[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_set[v]) continue;
    bool dominated = false;
    for (VertexId w : g.neighbors(v)) {
      if (in_set[w]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;  // v could be added
  }
  return true;
}

MISFamily enumerate_mis(const Tree& g, int cap) {
  if (cap < 1 || cap > kHardEnumerationCap) {
    throw std::invalid_argument("enumeration cap must be in [1, " +
                                std::to_string(kHardEnumerationCap) + "], got " +
                                std::to_string(cap));
  }
  const int n = g.vertex_count();
  if (n > cap) {
    throw std::length_error("graph with " + std::to_string(n) +
                            " vertices exceeds the enumeration cap of " + std::to_string(cap));
  }

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }

  const std::uint64_t limit = std::uint64_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(limit - 1);
  MISFamily family;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    bool independent = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      if (adj[std::countr_zero(rest)] & mask) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    bool maximal = true;
    for (std::uint32_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
      if (!(adj[std::countr_zero(rest)] & mask)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    std::vector<VertexId> set;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      set.push_back(std::countr_zero(rest));
    }
    family.push_back(std::move(set));
  }
  std::sort(family.begin(), family.end());
  return family;
}

namespace {

// Three-state counting DP over the tree rooted at `root`. For each vertex:
//   in        - vertex belongs to the set
//   dominated - out of the set, some child is in it
//   open      - out of the set, no neighbor in it yet (must be saved by its
//               parent; invalid at the root)
struct NodeCounts {
  Int in;
  Int dominated;
  Int open;
};

Int run_mis_dp(const Tree& g, VertexId root, std::optional<VertexId> forced_in) {
  g.require_valid(root);
  const int n = g.vertex_count();

  // BFS order from the root; children processed before parents below.
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> parent(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId x = order[head];
    for (VertexId y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        order.push_back(y);
      }
    }
  }

  std::vector<NodeCounts> dp(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    Int in = 1;        // children out, in any dominated-or-open state
    Int prod_ab = 1;   // children in or dominated
    Int prod_b = 1;    // children dominated (by their own subtrees)
    for (VertexId c : g.neighbors(v)) {
      if (c == parent[v]) continue;
      in *= dp[c].dominated + dp[c].open;
      prod_ab *= dp[c].in + dp[c].dominated;
      prod_b *= dp[c].dominated;
    }
    dp[v].in = in;
    dp[v].dominated = prod_ab - prod_b;
    dp[v].open = prod_b;
    if (forced_in && *forced_in == v) {
      dp[v].dominated = 0;
      dp[v].open = 0;
    }
  }
  return dp[root].in + dp[root].dominated;
}

}  // namespace

Int count_mis(const Tree& g, VertexId root) { return run_mis_dp(g, root, std::nullopt); }

Int count_mis_containing(const Tree& g, VertexId x, VertexId root) {
  g.require_valid(x);
  return run_mis_dp(g, root, x);
}

namespace {

void require_ordered_path_core(const ExpandedTree& g) {
  if (!g.core_is_ordered_path()) {
    throw std::invalid_argument("per-position counts need an ordered-path core");
  }
}

void require_central(const ExpandedTree& g, int i) {
  if (i < 1 || i + 1 >= g.core_size()) {
    throw std::out_of_range("position " + std::to_string(i) + " outside the central path [1, " +
                            std::to_string(g.core_size() - 2) + "]");
  }
}

}  // namespace

Int side_count(const ExpandedTree& g, int i, PositionKind kind, bool left_side) {
  require_ordered_path_core(g);
  const int n = g.core_size();
  if (i < 0 || i >= n) {
    throw std::out_of_range("core position " + std::to_string(i) + " outside [0, " +
                            std::to_string(n) + ")");
  }

  // Members of the side graph, in old-id terms. The labeled vertex x and its
  // support vertex always belong; then whole positions on the chosen side.
  std::vector<VertexId> members;
  members.push_back(g.core_vertex(i));
  if (kind == PositionKind::kLeaf) members.push_back(g.leaf_of(i));
  for (int j = 0; j < n; ++j) {
    if (left_side ? j > i : j < i) {
      members.push_back(g.core_vertex(j));
      members.push_back(g.leaf_of(j));
    }
  }
  std::sort(members.begin(), members.end());

  std::vector<int> new_id(g.graph().vertex_count(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) new_id[members[k]] = static_cast<int>(k);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : g.graph().edges()) {
    if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  }
  const Tree side = Tree::from_edges(static_cast<int>(members.size()), std::move(edges));

  const VertexId x = kind == PositionKind::kCore ? g.core_vertex(i) : g.leaf_of(i);
  return count_mis_containing(side, new_id[x]);
}

Int left_count(const ExpandedTree& g, int i, PositionKind kind) {
  require_ordered_path_core(g);
  require_central(g, i);
  return side_count(g, i, kind, /*left_side=*/true);
}

Int right_count(const ExpandedTree& g, int i, PositionKind kind) {
  require_ordered_path_core(g);
  require_central(g, i);
  return side_count(g, i, kind, /*left_side=*/false);
}

Rational weighted_left_count(const ExpandedTree& g, int i, PositionKind kind,
                             const Rational& alpha, const Rational& beta) {
  require_ordered_path_core(g);
  require_central(g, i);
  const Int full = side_count(g, i, kind, /*left_side=*/true);
  // Same structural position in the corona of the one-shorter core path.
  const ExpandedTree shortened = expanded_path(g.core_size() - 1);
  const Int shifted = side_count(shortened, i, kind, /*left_side=*/true);
  return beta * Rational(full) + alpha * Rational(shifted);
}

SideCounts side_counts(const ExpandedTree& g, int i, PositionKind kind) {
  require_ordered_path_core(g);
  require_central(g, i);
  const VertexId x = kind == PositionKind::kCore ? g.core_vertex(i) : g.leaf_of(i);
  SideCounts out{left_count(g, i, kind), right_count(g, i, kind),
                 count_mis_containing(g.graph(), x)};
  return out;
}

IdentityReport verify_sanders_results(int n) {
  if (n < 3) {
    throw std::invalid_argument("central path is empty for n = " + std::to_string(n) +
                                "; need n >= 3");
  }
  const std::string name = "sanders-results";
  FieldList params = {{"n", std::to_string(n)}};
  const ExpandedTree g = expanded_path(n);
  const Int m = count_mis(g.graph());
  long long cases = 0;

  auto fail = [&](int i, const std::string& what, const Int& expected, const Int& actual) {
    FieldList cx = {{"n", std::to_string(n)},
                    {"i", std::to_string(i)},
                    {"what", what},
                    {"expected", to_string(expected)},
                    {"actual", to_string(actual)}};
    return IdentityReport::failed(name, params, std::move(cx), cases);
  };

  // totals: M = 2 F_n + F_{n-1} = F_{n+2}
  ++cases;
  const Int total_closed = 2 * fib_int(n) + fib_int(n - 1);
  if (m != total_closed) return fail(-1, "M = 2F_n + F_{n-1}", total_closed, m);
  ++cases;
  if (m != fib_int(n + 2)) return fail(-1, "M = F_{n+2}", fib_int(n + 2), m);

  for (int i = 1; i + 1 < n; ++i) {
    const SideCounts core = side_counts(g, i, PositionKind::kCore);
    const SideCounts leaf = side_counts(g, i, PositionKind::kLeaf);

    // result 1
    ++cases;
    const Int sum = leaf.lambda + core.lambda;
    if (sum != m) return fail(i, "lambda(z_i) + lambda(v_i) = M", m, sum);

    // result 2
    ++cases;
    if (core.lambda != core.l * core.r)
      return fail(i, "lambda(v_i) = l(v_i) r(v_i)", core.l * core.r, core.lambda);
    ++cases;
    if (leaf.lambda != leaf.l * leaf.r)
      return fail(i, "lambda(z_i) = l(z_i) r(z_i)", leaf.l * leaf.r, leaf.lambda);

    // result 3
    ++cases;
    if (core.l != fib_int(n - i)) return fail(i, "l(v_i) = F_{n-i}", fib_int(n - i), core.l);
    ++cases;
    if (core.r != fib_int(i + 1)) return fail(i, "r(v_i) = F_{i+1}", fib_int(i + 1), core.r);
    ++cases;
    if (leaf.l != fib_int(n - i + 1))
      return fail(i, "l(z_i) = F_{n-i+1}", fib_int(n - i + 1), leaf.l);
    ++cases;
    if (leaf.r != fib_int(i + 2)) return fail(i, "r(z_i) = F_{i+2}", fib_int(i + 2), leaf.r);
  }
  return IdentityReport::passed(name, std::move(params), cases);
}

IdentityReport verify_result1_general(const Tree& core) {
  const std::string name = "result1-general";
  FieldList params = {{"core_vertices", std::to_string(core.vertex_count())}};
  const ExpandedTree g(core);
  const Int m = count_mis(g.graph());
  long long cases = 0;
  for (int i = 0; i < g.core_size(); ++i) {
    ++cases;
    const Int lambda_v = count_mis_containing(g.graph(), g.core_vertex(i));
    const Int lambda_z = count_mis_containing(g.graph(), g.leaf_of(i));
    if (lambda_v + lambda_z != m) {
      FieldList cx = {{"i", std::to_string(i)},
                      {"expected", to_string(m)},
                      {"actual", to_string(Int(lambda_v + lambda_z))}};
      return IdentityReport::failed(name, std::move(params), std::move(cx), cases);
    }
  }
  return IdentityReport::passed(name, std::move(params), cases);
}

}  // namespace fibtree
