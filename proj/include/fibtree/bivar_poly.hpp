#ifndef FIBTREE_BIVAR_POLY_HPP
#define FIBTREE_BIVAR_POLY_HPP

#include "fibtree/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace fibtree {

// Exponent pair of one monomial a^da * b^db, where a and b stand for the
// seed values alpha and beta.
struct Monomial {
  int da = 0;
  int db = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Ascending graded order, a senior within a grade; map iteration therefore
// runs constant term first, matching the printed form "b^3 + a^2*b".
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    const int dx = x.da + x.db;
    const int dy = y.da + y.db;
    if (dx != dy) return dx < dy;
    return x.da < y.da;
  }
};

// Integer-coefficient polynomial in (a, b), canonical by construction: no
// zero coefficient is ever stored.
class BivarPoly {
 public:
  BivarPoly() = default;

  static BivarPoly constant(Int c);
  static BivarPoly var_a();
  static BivarPoly var_b();
  static BivarPoly monomial(Int c, int da, int db);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Int, MonomialOrder>& terms() const { return terms_; }

  int degree_in_a() const;

  // Coefficient of a^da * b^db, zero when the term is absent.
  Int coefficient(int da, int db) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  Rational eval(const Rational& a, const Rational& b) const;

  // Exact division by a^da * b^db; throws std::domain_error when some term
  // is not divisible.
  BivarPoly divided_by_monomial(int da, int db) const;

  // Substitutes a := c1*b + c0 and returns the univariate coefficients in b,
  // ascending, with trailing zeros trimmed.
  std::vector<Int> substitute_a_linear(const Int& c1, const Int& c0) const;

  // Canonical human-readable form, e.g. "b^3 + a^2*b"; "0" for the zero
  // polynomial.
  std::string str() const;

  // [{"da": int, "db": int, "c": "int"}] in canonical term order.
  nlohmann::ordered_json to_json() const;

 private:
  void add_term(const Monomial& m, const Int& c);

  std::map<Monomial, Int, MonomialOrder> terms_;
};

// Exact value of sum_j coeffs[j] x^j at a rational point.
Rational eval_univariate(const std::vector<Int>& coeffs, const Rational& x);

// All rational roots of an integer-coefficient univariate polynomial
// (ascending coefficients), sorted ascending, each listed once. Throws
// std::domain_error for the zero polynomial.
std::vector<Rational> rational_roots(const std::vector<Int>& coeffs);

}  // namespace fibtree

#endif
