#include "fibtree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fibtree {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return all_digits(s.substr(start));
}

Int parse_int(const std::string& s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + s + "'");
  }
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  Int v;
  if (mpz_set_str(v.get_mpz_t(), body.c_str(), 10) != 0) {
    throw std::invalid_argument("not an integer literal: '" + s + "'");
  }
  return v;
}

}  // namespace

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace only; interior whitespace is malformed
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }

  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.find('/', slash + 1) != std::string::npos || s.find('.') != std::string::npos) {
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    const Int num = parse_int(s.substr(0, slash));
    const Int den = parse_int(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return make_rational(num, den);
  }

  const std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('.', dot + 1) != std::string::npos) {
      throw std::invalid_argument("malformed decimal literal: '" + text + "'");
    }
    const std::string int_part = s.substr(0, dot);
    const std::string frac_part = s.substr(dot + 1);
    if (!is_integer_literal(int_part) || !all_digits(frac_part)) {
      throw std::invalid_argument("malformed decimal literal: '" + text + "'");
    }
    const bool negative = int_part[0] == '-';
    Int scaled = parse_int(int_part);
    Int pow10 = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) pow10 *= 10;
    scaled *= pow10;
    Int frac = parse_int(frac_part);
    scaled += negative ? -frac : frac;
    return make_rational(scaled, pow10);
  }

  return Rational(parse_int(s));
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Int& value) { return value.get_str(); }

Int rational_to_int(const Rational& value) {
  if (value.get_den() != 1) {
    throw std::domain_error("rational " + value.get_str() + " is not an integer");
  }
  return value.get_num();
}

}  // namespace fibtree
