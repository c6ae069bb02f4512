#include "fibtree/xk.hpp"

#include <stdexcept>
#include <string>

namespace fibtree {

namespace {

FieldList tower_params(const XkTower& tower) {
  return {{"alpha", to_string(tower.base().alpha())}, {"beta", to_string(tower.base().beta())}};
}

}  // namespace

XkTower::XkTower(Rational alpha, Rational beta) : base_(std::move(alpha), std::move(beta)) {}

std::pair<int, int> XkTower::factor_levels(int k) {
  if (k < 1) {
    throw std::invalid_argument("factor levels are defined for k >= 1");
  }
  const int m = k / 2;
  return (k % 2 == 0) ? std::pair{m - 1, m - 1} : std::pair{m, m - 1};
}

Rational XkTower::value(int k, long n) const {
  if (k < -1) {
    throw std::invalid_argument("level must be >= -1, got " + std::to_string(k));
  }
  if (k == -1) return base_.term(n);

  const auto key = std::make_pair(k, n);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Rational result;
  if (k == 0) {
    result = base_.beta() * base_.term(n) + base_.alpha() * base_.term(n - 1);
  } else {
    // canonical splitting index i = n
    const auto [a, b] = factor_levels(k);
    result = value(a, 1) * value(b, n) + value(a, 0) * value(b, n - 1);
  }
  cache_.emplace(key, result);
  return result;
}

Rational XkTower::rhs_at(int k, long n, long i) const {
  const auto [a, b] = factor_levels(k);
  return value(a, n - i + 1) * value(b, i) + value(a, n - i) * value(b, i - 1);
}

IdentityReport check_i_independence(const XkTower& tower, int k, long n) {
  if (k < 1 || n < 1) {
    throw std::invalid_argument("i-independence needs k >= 1 and n >= 1");
  }
  FieldList params = tower_params(tower);
  params.emplace_back("k", std::to_string(k));
  params.emplace_back("n", std::to_string(n));

  const Rational expected = tower.value(k, n);
  long long cases = 0;
  for (long i = 1; i <= n; ++i) {
    ++cases;
    const Rational at_i = tower.rhs_at(k, n, i);
    if (at_i != expected) {
      FieldList cx = {{"n", std::to_string(n)},
                      {"i", std::to_string(i)},
                      {"lhs", to_string(expected)},
                      {"rhs", to_string(at_i)}};
      return IdentityReport::failed("xk-i-independence", std::move(params), std::move(cx), cases);
    }
  }
  return IdentityReport::passed("xk-i-independence", std::move(params), cases);
}

IdentityReport check_fib_in_n(const XkTower& tower, int k, long n_max) {
  if (n_max < 3) {
    throw std::invalid_argument("check_fib_in_n needs n_max >= 3");
  }
  FieldList params = tower_params(tower);
  params.emplace_back("k", std::to_string(k));
  params.emplace_back("n_max", std::to_string(n_max));

  long long cases = 0;
  for (long n = 3; n <= n_max; ++n) {
    ++cases;
    const Rational lhs = tower.value(k, n);
    const Rational rhs = tower.value(k, n - 1) + tower.value(k, n - 2);
    if (lhs != rhs) {
      FieldList cx = {{"n", std::to_string(n)},
                      {"lhs", to_string(lhs)},
                      {"rhs", to_string(rhs)}};
      return IdentityReport::failed("xk-fib-in-n", std::move(params), std::move(cx), cases);
    }
  }
  return IdentityReport::passed("xk-fib-in-n", std::move(params), cases);
}

ComboSpec parse_combo_spec(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("combo spec must be a non-empty JSON array");
  }
  ComboSpec combo;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("k") ||
        !entry.contains("n")) {
      throw std::invalid_argument("combo term needs fields a, k, n");
    }
    ComboTerm term;
    term.coefficient = parse_rational(entry.at("a").get<std::string>());
    term.k = entry.at("k").get<int>();
    term.n = entry.at("n").get<long>();
    if (term.k < -1) {
      throw std::invalid_argument("combo term level must be >= -1");
    }
    combo.push_back(std::move(term));
  }
  return combo;
}

namespace {

Rational combo_value(const XkTower& tower, const ComboSpec& combo, long shift) {
  Rational sum(0);
  for (const ComboTerm& term : combo) {
    sum += term.coefficient * tower.value(term.k, term.n + shift);
  }
  return sum;
}

}  // namespace

IdentityReport combo_fib_in_n(const XkTower& tower, const ComboSpec& combo, long t_max) {
  if (combo.empty()) {
    throw std::invalid_argument("combo spec must be non-empty");
  }
  if (t_max < 2) {
    throw std::invalid_argument("combo_fib_in_n needs t_max >= 2");
  }
  FieldList params = tower_params(tower);
  params.emplace_back("terms", std::to_string(combo.size()));
  params.emplace_back("t_max", std::to_string(t_max));

  long long cases = 0;
  for (long t = 2; t <= t_max; ++t) {
    ++cases;
    const Rational lhs = combo_value(tower, combo, t);
    const Rational rhs = combo_value(tower, combo, t - 1) + combo_value(tower, combo, t - 2);
    if (lhs != rhs) {
      FieldList cx = {{"t", std::to_string(t)},
                      {"lhs", to_string(lhs)},
                      {"rhs", to_string(rhs)}};
      return IdentityReport::failed("xk-combo-fib-in-n", std::move(params), std::move(cx), cases);
    }
  }
  return IdentityReport::passed("xk-combo-fib-in-n", std::move(params), cases);
}

IdentityReport check_meta_fib(const XkTower& tower, int k_max, long n) {
  if (k_max < 2 || n < 2) {
    throw std::invalid_argument("check_meta_fib needs k_max >= 2 and n >= 2");
  }
  FieldList params = tower_params(tower);
  params.emplace_back("k_max", std::to_string(k_max));
  params.emplace_back("n", std::to_string(n));

  long long cases = 0;
  for (int k = 2; k <= k_max; ++k) {
    ++cases;
    const Rational lhs = tower.value(k, n);
    const Rational rhs = tower.value(k - 1, n) + tower.value(k - 2, n);
    if (lhs != rhs) {
      FieldList cx = {{"k", std::to_string(k)},
                      {"n", std::to_string(n)},
                      {"lhs", to_string(lhs)},
                      {"rhs", to_string(rhs)}};
      return IdentityReport::failed("xk-meta-fib", std::move(params), std::move(cx), cases);
    }
  }
  return IdentityReport::passed("xk-meta-fib", std::move(params), cases);
}

bool classify_seeds(const Rational& alpha, const Rational& beta) {
  return (alpha == 0 && beta == 0) || (alpha == 1 && beta == 1) || (alpha == -1 && beta == 0);
}

}  // namespace fibtree
