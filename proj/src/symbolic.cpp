#include "fibtree/symbolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fibtree {

namespace {

const BivarPoly kZeroPoly;

}  // namespace

GLinearForm::GLinearForm(std::vector<BivarPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void GLinearForm::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BivarPoly& GLinearForm::coeff(int j) const {
  if (j < 0) throw std::out_of_range("G-basis position must be nonnegative");
  if (j >= static_cast<int>(coeffs_.size())) return kZeroPoly;
  return coeffs_[static_cast<std::size_t>(j)];
}

GLinearForm& GLinearForm::operator+=(const GLinearForm& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

GLinearForm GLinearForm::scaled(const BivarPoly& p) const {
  std::vector<BivarPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * p);
  return GLinearForm(std::move(out));
}

Rational GLinearForm::eval(const FibSequence& seq, long n) const {
  Rational out = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    out += coeffs_[j].eval(seq.alpha(), seq.beta()) * seq.term(n - static_cast<long>(j));
  return out;
}

BivarPoly g_at(long index) {
  BivarPoly prev = BivarPoly::var_a();  // G_0
  BivarPoly cur = BivarPoly::var_b();   // G_1
  if (index >= 0) {
    for (long k = 0; k < index; ++k) {
      BivarPoly next = prev + cur;
      prev = cur;
      cur = next;
    }
    return prev;
  }
  // Backward: G_{k-2} = G_k - G_{k-1}; invariant (prev, cur) = (G_k, G_{k+1}).
  for (long k = 0; k > index; --k) {
    BivarPoly below = cur - prev;
    cur = prev;
    prev = below;
  }
  return prev;
}

GLinearForm x0_symbolic(int shift) {
  if (shift > 0)
    throw std::invalid_argument("x0_symbolic supports only nonpositive shifts");
  // b at G_{n+shift} = position -shift, a one step further down.
  std::vector<BivarPoly> coeffs(static_cast<std::size_t>(-shift) + 2);
  coeffs[static_cast<std::size_t>(-shift)] = BivarPoly::var_b();
  coeffs[static_cast<std::size_t>(-shift) + 1] = BivarPoly::var_a();
  return GLinearForm(std::move(coeffs));
}

GLinearForm expand_eq3() {
  const GLinearForm x0 = x0_symbolic(0);
  const GLinearForm x0_prev = x0_symbolic(-1);
  return x0.scaled(BivarPoly::var_b()) + x0_prev.scaled(BivarPoly::var_a()) + x0;
}

GLinearForm expand_eq4() {
  const GLinearForm x0 = x0_symbolic(0);
  const GLinearForm x0_prev = x0_symbolic(-1);
  // X^(0)_m collapsed to a pure polynomial: b*G_m + a*G_{m-1}.
  const auto x0_poly = [](long m) {
    return BivarPoly::var_b() * g_at(m) + BivarPoly::var_a() * g_at(m - 1);
  };
  return x0.scaled(x0_poly(1)) + x0_prev.scaled(x0_poly(0));
}

GLinearForm eq3_printed_form() {
  std::vector<BivarPoly> coeffs(3);
  coeffs[0] = BivarPoly::monomial(1, 0, 1) + BivarPoly::monomial(1, 0, 2);  // b + b^2
  coeffs[1] = BivarPoly::monomial(1, 1, 0) + BivarPoly::monomial(2, 1, 1);  // a + 2ab
  coeffs[2] = BivarPoly::monomial(1, 2, 0);                                 // a^2
  return GLinearForm(std::move(coeffs));
}

GLinearForm eq4_printed_form() {
  std::vector<BivarPoly> coeffs(3);
  coeffs[0] = BivarPoly::monomial(1, 0, 3) + BivarPoly::monomial(1, 2, 1);  // b^3 + a^2 b
  coeffs[1] = BivarPoly::monomial(1, 3, 0) + BivarPoly::monomial(3, 1, 2) -
              BivarPoly::monomial(1, 2, 1);  // a^3 + 3ab^2 - a^2 b
  coeffs[2] = BivarPoly::monomial(2, 2, 1) - BivarPoly::monomial(1, 3, 0);  // 2a^2 b - a^3
  return GLinearForm(std::move(coeffs));
}

std::array<BivarPoly, 3> derive_meta_system() {
  const GLinearForm eq3 = expand_eq3();
  const GLinearForm eq4 = expand_eq4();
  return {eq4.coeff(0) - eq3.coeff(0), eq4.coeff(1) - eq3.coeff(1), eq4.coeff(2) - eq3.coeff(2)};
}

SeedSolutionSet solve_meta_system() {
  const auto system = derive_meta_system();

  const auto satisfies_all = [&system](const SeedPair& s) {
    return std::all_of(system.begin(), system.end(), [&s](const BivarPoly& eq) {
      return eq.eval(s.first, s.second) == 0;
    });
  };

  // Gathers candidate betas from the substituted system (a := c1*b + c0) and
  // keeps the pairs satisfying every equation.
  std::set<SeedPair> solutions;
  const auto solve_branch = [&](const Int& c1, const Int& c0) {
    for (const auto& eq : system) {
      const std::vector<Int> uni = eq.substitute_a_linear(c1, c0);
      if (uni.empty()) continue;  // identically zero on this branch
      for (const Rational& beta : rational_roots(uni)) {
        const Rational alpha = Rational(c1) * beta + Rational(c0);
        if (const SeedPair cand{alpha, beta}; satisfies_all(cand)) solutions.insert(cand);
      }
      return;  // one nonzero equation pins the branch's betas
    }
  };

  // Branch 1: alpha = 0, the common zero of the last equation's a^2 factor.
  solve_branch(0, 0);

  // Branch 2: the last equation factors as a^2 * (linear in a, b); its linear
  // part gives the elimination a = 2b - 1.
  const BivarPoly linear = system[2].divided_by_monomial(2, 0);
  const Int lead_a = linear.coefficient(1, 0);
  if (linear.degree_in_a() != 1 || (lead_a != 1 && lead_a != -1))
    throw std::domain_error("meta system lost its linear elimination branch");
  const Int sign = -lead_a;  // move the rest across: a = sign * (c_b*b + c_c)
  solve_branch(sign * linear.coefficient(0, 1), sign * linear.coefficient(0, 0));

  return {solutions.begin(), solutions.end()};
}

}  // namespace fibtree
