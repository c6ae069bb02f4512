#ifndef FIBTREE_SYMBOLIC_HPP
#define FIBTREE_SYMBOLIC_HPP

#include "fibtree/bivar_poly.hpp"
#include "fibtree/fib_sequence.hpp"
#include "fibtree/rational.hpp"

#include <array>
#include <utility>
#include <vector>

namespace fibtree {

// Linear combination sum_j coeffs[j](a, b) * G_{n-j}; position j is the
// coefficient of G_{n-j}.
class GLinearForm {
 public:
  GLinearForm() = default;
  explicit GLinearForm(std::vector<BivarPoly> coeffs);

  const std::vector<BivarPoly>& coeffs() const { return coeffs_; }
  // Coefficient of G_{n-j}; zero polynomial when j is past the end.
  const BivarPoly& coeff(int j) const;

  GLinearForm& operator+=(const GLinearForm& rhs);
  friend GLinearForm operator+(GLinearForm lhs, const GLinearForm& rhs) { return lhs += rhs; }
  // Every coefficient multiplied by p.
  GLinearForm scaled(const BivarPoly& p) const;
  friend bool operator==(const GLinearForm&, const GLinearForm&) = default;

  // Contracts the form against a concrete sequence: coefficients evaluated at
  // the sequence's own seeds, terms taken at indices n-j.
  Rational eval(const FibSequence& seq, long n) const;

 private:
  void trim();

  std::vector<BivarPoly> coeffs_;
};

using SeedPair = std::pair<Rational, Rational>;
using SeedSolutionSet = std::vector<SeedPair>;

// G_index as a polynomial in the seeds: G_0 = a, G_1 = b, extended in both
// directions by the recurrence.
BivarPoly g_at(long index);

// X^(0)_{n+shift} = b*G_{n+shift} + a*G_{n+shift-1} in the G_{n-j} basis.
// Only nonpositive shifts occur in the derivation.
GLinearForm x0_symbolic(int shift);

// X^(1)_n + X^(0)_n = b*X^(0)_n + a*X^(0)_{n-1} + b*G_n + a*G_{n-1},
// collected in the G-basis: (b+b^2)G_n + (a+2ab)G_{n-1} + a^2 G_{n-2}.
GLinearForm expand_eq3();

// X^(2)_n = X^(0)_1 * X^(0)_n + X^(0)_0 * X^(0)_{n-1} with the two leading
// factors collapsed to polynomials: (b^3+a^2 b)G_n + (a^3+3ab^2-a^2 b)G_{n-1}
// + (2a^2 b-a^3)G_{n-2}.
GLinearForm expand_eq4();

// Reference forms with the printed coefficients entered term by term, kept
// separate from the derivation so the two routes check each other.
GLinearForm eq3_printed_form();
GLinearForm eq4_printed_form();

// Componentwise difference eq4 - eq3: three polynomials that must all vanish
// at any seed pair making the tower meta-Fibonacci.
std::array<BivarPoly, 3> derive_meta_system();

// Exact rational solutions of derive_meta_system():
// {(-1,0), (0,0), (1,1)}, sorted by (alpha, beta).
SeedSolutionSet solve_meta_system();

}  // namespace fibtree

#endif
