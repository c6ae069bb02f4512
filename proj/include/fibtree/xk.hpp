#ifndef FIBTREE_XK_HPP
#define FIBTREE_XK_HPP

#include "fibtree/fib_sequence.hpp"
#include "fibtree/identity_report.hpp"
#include "fibtree/rational.hpp"

#include <json.hpp>

#include <map>
#include <utility>
#include <vector>

namespace fibtree {

// Values of the iterated left-hand-side generalization X^(k)_n over a fixed
// seed pair. Level -1 is the base sequence G itself, level 0 is
// beta*G_n + alpha*G_{n-1}, and each level k >= 1 is the product recursion
//   X^(k)_n = X^(a)_{n-i+1} X^(b)_i + X^(a)_{n-i} X^(b)_{i-1}
// with factor levels (a, b) = factor_levels(k), evaluated at the canonical
// splitting index i = n. Every splitting index yields the same value;
// check_i_independence verifies that rather than assuming it.
class XkTower {
 public:
  XkTower(Rational alpha, Rational beta);

  const FibSequence& base() const { return base_; }

  // Levels pair up as even 2m -> (m-1, m-1), odd 2m+1 -> (m, m-1); level 1
  // therefore multiplies X^(0) against G. Requires k >= 1.
  static std::pair<int, int> factor_levels(int k);

  // X^(k)_n for k >= -1 and any integer n. Memoized.
  Rational value(int k, long n) const;

  // The level-k right-hand side at an explicit splitting index i; k >= 1.
  Rational rhs_at(int k, long n, long i) const;

 private:
  FibSequence base_;
  mutable std::map<std::pair<int, long>, Rational> cache_;
};

// All splitting indices i in [1, n] of the level-k recursion give one common
// value, which also equals value(k, n). k >= 1, n >= 1.
IdentityReport check_i_independence(const XkTower& tower, int k, long n);

// X^(k)_n = X^(k)_{n-1} + X^(k)_{n-2} for 3 <= n <= n_max. n_max >= 3.
IdentityReport check_fib_in_n(const XkTower& tower, int k, long n_max);

// One term of a linear combination of tower values.
struct ComboTerm {
  Rational coefficient;
  int k = 0;   // >= -1
  long n = 0;
};

using ComboSpec = std::vector<ComboTerm>;

// Parses [{"a": "2", "k": 1, "n": 4}, ...] with Rational strings.
ComboSpec parse_combo_spec(const nlohmann::json& j);

// Y(t) = sum_j a_j X^(k_j)_{n_j + t} satisfies Y(t) = Y(t-1) + Y(t-2) for
// 2 <= t <= t_max (the common shift applied to every n_j). t_max >= 2.
IdentityReport combo_fib_in_n(const XkTower& tower, const ComboSpec& combo, long t_max);

// X^(k)_n = X^(k-1)_n + X^(k-2)_n for 2 <= k <= k_max at the given n.
// k_max >= 2, n >= 2.
IdentityReport check_meta_fib(const XkTower& tower, int k_max, long n);

// True exactly for the seed pairs (0,0), (1,1), (-1,0) -- the ones for which
// the level index k itself behaves as a Fibonacci sequence.
bool classify_seeds(const Rational& alpha, const Rational& beta);

}  // namespace fibtree

#endif
