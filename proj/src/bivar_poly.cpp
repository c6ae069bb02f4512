#include "fibtree/bivar_poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace fibtree {

namespace {

Rational rational_pow(const Rational& base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Positive divisors of v > 0, unsorted.
std::vector<Int> positive_divisors(const Int& v) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= v; ++d) {
    if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      out.push_back(v / d);
    }
  }
  return out;
}

}  // namespace

BivarPoly BivarPoly::constant(Int c) { return monomial(std::move(c), 0, 0); }
BivarPoly BivarPoly::var_a() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::var_b() { return monomial(1, 0, 1); }

BivarPoly BivarPoly::monomial(Int c, int da, int db) {
  if (da < 0 || db < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  BivarPoly p;
  p.add_term(Monomial{da, db}, c);
  return p;
}

int BivarPoly::degree_in_a() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.da);
  return deg;
}

Int BivarPoly::coefficient(int da, int db) const {
  auto it = terms_.find(Monomial{da, db});
  return it == terms_.end() ? Int(0) : it->second;
}

void BivarPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out;
  for (const auto& [ml, cl] : lhs.terms_)
    for (const auto& [mr, cr] : rhs.terms_)
      out.add_term(Monomial{ml.da + mr.da, ml.db + mr.db}, cl * cr);
  return out;
}

Rational BivarPoly::eval(const Rational& a, const Rational& b) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_)
    out += Rational(c) * rational_pow(a, m.da) * rational_pow(b, m.db);
  return out;
}

BivarPoly BivarPoly::divided_by_monomial(int da, int db) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.da < da || m.db < db)
      throw std::domain_error("polynomial is not divisible by the monomial");
    out.terms_.emplace(Monomial{m.da - da, m.db - db}, c);
  }
  return out;
}

std::vector<Int> BivarPoly::substitute_a_linear(const Int& c1, const Int& c0) const {
  std::vector<Int> coeffs;
  auto bump = [&coeffs](int k, const Int& v) {
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, Int(0));
    coeffs[k] += v;
  };
  for (const auto& [m, c] : terms_) {
    // (c1*b + c0)^da expanded term by term.
    for (int j = 0; j <= m.da; ++j) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), m.da, j);
      Int part = c * binom;
      for (int t = 0; t < j; ++t) part *= c1;
      for (int t = 0; t < m.da - j; ++t) part *= c0;
      bump(m.db + j, part);
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    if (m.da > 0) {
      vars += "a";
      if (m.da > 1) vars += "^" + std::to_string(m.da);
    }
    if (m.db > 0) {
      if (!vars.empty()) vars += "*";
      vars += "b";
      if (m.db > 1) vars += "^" + std::to_string(m.db);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += vars;
    }
    first = false;
  }
  return out;
}

nlohmann::ordered_json BivarPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json term;
    term["da"] = m.da;
    term["db"] = m.db;
    term["c"] = c.get_str();
    arr.push_back(std::move(term));
  }
  return arr;
}

Rational eval_univariate(const std::vector<Int>& coeffs, const Rational& x) {
  Rational out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + Rational(*it);
  return out;
}

std::vector<Rational> rational_roots(const std::vector<Int>& coeffs) {
  std::vector<Int> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::domain_error("the zero polynomial has every rational as a root");

  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (c.size() > 1) {
    const Int lead = c.back() < 0 ? Int(-c.back()) : c.back();
    const Int tail = c.front() < 0 ? Int(-c.front()) : c.front();
    for (const Int& p : positive_divisors(tail)) {
      for (const Int& q : positive_divisors(lead)) {
        for (int sign : {1, -1}) {
          const Rational cand = make_rational(sign * p, q);
          if (eval_univariate(c, cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace fibtree
