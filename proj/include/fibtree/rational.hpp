#ifndef FIBTREE_RATIONAL_HPP
#define FIBTREE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace fibtree {

// Exact scalar types. Every count is an Int, every sequence value a
// Rational; nothing in this library ever touches floating point.
using Int = mpz_class;
using Rational = mpq_class;

// num/den with canonicalization (lowest terms, positive denominator).
// Throws std::invalid_argument on a zero denominator.
Rational make_rational(const Int& num, const Int& den);

// Accepts "p", "p/q", and terminating decimals ("0.25", "-3.5").
// Anything else (zero denominators, exponents, repeating-decimal
// notation, stray characters) throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Int& value);

// The value must be integral (denominator 1); throws std::domain_error
// otherwise.
Int rational_to_int(const Rational& value);

}  // namespace fibtree

#endif
