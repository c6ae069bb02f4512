#ifndef FIBTREE_FIB_SEQUENCE_HPP
#define FIBTREE_FIB_SEQUENCE_HPP

#include "fibtree/rational.hpp"

namespace fibtree {

// A two-seed linear recurrence G_n = G_{n-1} + G_{n-2} with G_0 = alpha,
// G_1 = beta, extended to all integer indices via the backward recurrence
// G_{n-2} = G_n - G_{n-1}.
class FibSequence {
 public:
  FibSequence(Rational alpha, Rational beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  // G_n, exact, O(|n|) additions.
  Rational term(long n) const;

  // The classical sequence F: seeds (0, 1).
  static FibSequence classical();

 private:
  Rational alpha_;
  Rational beta_;
};

// F_n of the classical sequence, negative indices included
// (F_{-1} = 1, F_{-2} = -1, ...).
Rational fib(long n);

// F_n as an integer; classical Fibonacci values are always integral.
Int fib_int(long n);

}  // namespace fibtree

#endif
