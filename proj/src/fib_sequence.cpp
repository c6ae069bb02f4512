#include "fibtree/fib_sequence.hpp"

#include <utility>

namespace fibtree {

FibSequence::FibSequence(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

FibSequence FibSequence::classical() { return FibSequence(Rational(0), Rational(1)); }

Rational FibSequence::term(long n) const {
  if (n == 0) return alpha_;
  if (n == 1) return beta_;
  Rational prev = alpha_;  // G_k-1
  Rational cur = beta_;    // G_k
  if (n > 1) {
    for (long k = 1; k < n; ++k) {
      Rational next = cur + prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // n < 0: walk backward from (G_0, G_1)
  for (long k = 0; k > n; --k) {
    Rational before = cur - prev;  // G_{k-1} = G_{k+1} - G_k
    cur = prev;
    prev = before;
  }
  return prev;
}

Rational fib(long n) { return FibSequence::classical().term(n); }

Int fib_int(long n) { return rational_to_int(fib(n)); }

}  // namespace fibtree
