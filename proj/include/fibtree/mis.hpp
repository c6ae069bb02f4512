#ifndef FIBTREE_MIS_HPP
#define FIBTREE_MIS_HPP

#include "fibtree/identity_report.hpp"
#include "fibtree/rational.hpp"
#include "fibtree/tree.hpp"

#include <vector>

namespace fibtree {

// Canonically ordered family of maximal independent sets: each set sorted
// ascending, the family sorted lexicographically.
using MISFamily = std::vector<std::vector<VertexId>>;

inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kHardEnumerationCap = 30;

bool is_independent(const Tree& g, const std::vector<VertexId>& s);
bool is_maximal_independent(const Tree& g, const std::vector<VertexId>& s);

// Brute-force oracle: filters all 2^n vertex subsets. Graphs above the cap
// throw std::length_error; caps above kHardEnumerationCap are rejected.
MISFamily enumerate_mis(const Tree& g, int cap = kDefaultEnumerationCap);

// Exact number of maximal independent sets via a single-pass rooted DP with
// three states per vertex (in the set / out and dominated / out and not yet
// dominated). The count is root-invariant.
Int count_mis(const Tree& g, VertexId root = 0);

// Number of maximal independent sets containing x: the same DP with x's
// state forced to "in the set".
Int count_mis_containing(const Tree& g, VertexId x, VertexId root = 0);

enum class PositionKind { kCore, kLeaf };

// Per-position side counts on the canonical path corona. With core positions
// 0..n-1 in id order, the "left" side of position i is {positions > i} and
// the "right" side is {positions < i}; a leaf's side includes its support
// vertex. This orientation is the one that reproduces the closed forms
// l(v_i) = F_{n-i}, r(v_i) = F_{i+1}, l(z_i) = F_{n-i+1}, r(z_i) = F_{i+2}.
//
// Both require an ordered-path core and a central position 1 <= i <= n-2.
Int left_count(const ExpandedTree& g, int i, PositionKind kind);
Int right_count(const ExpandedTree& g, int i, PositionKind kind);

// Side count at any core position 0..n-1 (the ends included); used by the
// weighted counts, whose shortened-core term lands on a path end.
Int side_count(const ExpandedTree& g, int i, PositionKind kind, bool left_side);

// Weighted left count L(x) = beta * l(x in p(T)) + alpha * l(x in p(T')),
// where T' is the core path with one vertex dropped from the far end. Equals
// beta*F_{n-i} + alpha*F_{n-i-1} for v_i and beta*F_{n-i+1} + alpha*F_{n-i}
// for z_i, i.e. a generalized Fibonacci term with seeds (alpha, beta).
Rational weighted_left_count(const ExpandedTree& g, int i, PositionKind kind,
                             const Rational& alpha, const Rational& beta);

// Per-position snapshot of the three counts; lambda = l * r.
struct SideCounts {
  Int l;
  Int r;
  Int lambda;
};

SideCounts side_counts(const ExpandedTree& g, int i, PositionKind kind);

// Checks, for every central position i of the n-vertex path corona:
//   1. lambda(z_i) + lambda(v_i) = M
//   2. lambda(x) = l(x) * r(x) for x = v_i and x = z_i
//   3. l(v_i) = F_{n-i}, r(v_i) = F_{i+1}, l(z_i) = F_{n-i+1}, r(z_i) = F_{i+2}
// plus the totals M = 2 F_n + F_{n-1} = F_{n+2}. Requires n >= 3 (a nonempty
// central path).
IdentityReport verify_sanders_results(int n);

// On expand(core), for every attached leaf z and its support vertex v:
// M = lambda(z) + lambda(v). Holds for arbitrary core trees, not only paths.
IdentityReport verify_result1_general(const Tree& core);

}  // namespace fibtree

#endif
