// Acceptance checks: one line per criterion, each timed against its budget.
// Exits nonzero when any criterion fails or overruns.

#include "fibtree/fib_sequence.hpp"
#include "fibtree/identities.hpp"
#include "fibtree/mis.hpp"
#include "fibtree/symbolic.hpp"
#include "fibtree/tree.hpp"
#include "fibtree/xk.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace fibtree;

namespace {

using SeedList = std::vector<std::pair<Rational, Rational>>;

SeedList random_rational_pairs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SeedList out;
  while (static_cast<int>(out.size()) < count) {
    const long pa = static_cast<long>(rng() % 19) - 9;
    const long qa = static_cast<long>(rng() % 9) + 1;
    const long pb = static_cast<long>(rng() % 19) - 9;
    const long qb = static_cast<long>(rng() % 9) + 1;
    out.emplace_back(make_rational(pa, qa), make_rational(pb, qb));
  }
  return out;
}

// 1. M(p(path_n)) = F_{n+2} exactly for n <= 60; enumeration agrees for
//    n <= 10.
bool corona_count_law(std::string& detail) {
  for (int n = 1; n <= 60; ++n) {
    const ExpandedTree g = expanded_path(n);
    const Int expected = fib_int(n + 2);
    if (count_mis(g.graph()) != expected) {
      detail = "dp count != F_{n+2} at n=" + std::to_string(n);
      return false;
    }
    if (n <= 10 && Int(enumerate_mis(g.graph()).size()) != expected) {
      detail = "enumeration != F_{n+2} at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 2. DP equals the brute-force oracle on 110 random trees spanning every
//    size in [1, 24] and on the path coronas with n <= 10.
bool oracle_equivalence(std::string& detail) {
  for (int t = 0; t < 110; ++t) {
    const int n = 1 + t % 24;
    const Tree g = random_tree(n, 1000 + static_cast<std::uint64_t>(t));
    if (count_mis(g) != Int(enumerate_mis(g).size())) {
      detail = "mismatch on random tree n=" + std::to_string(n) + " seed=" +
               std::to_string(1000 + t);
      return false;
    }
  }
  for (int n = 1; n <= 10; ++n) {
    const ExpandedTree g = expanded_path(n);
    if (count_mis(g.graph()) != Int(enumerate_mis(g.graph()).size())) {
      detail = "mismatch on path corona n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 3. The three per-position results hold at every central i for 3 <= n <= 15:
//    lambda(z_i)+lambda(v_i)=M, lambda=l*r, and the four closed forms.
bool per_position_results(std::string& detail) {
  for (int n = 3; n <= 15; ++n) {
    const IdentityReport r = verify_sanders_results(n);
    if (!r.pass) {
      detail = "n=" + std::to_string(n);
      for (const auto& [key, value] : *r.counterexample) detail += " " + key + "=" + value;
      return false;
    }
  }
  return true;
}

// 4. Identity sweeps: corollary 1 over 1 <= i <= n <= 30; ruggles and gg over
//    25 seed pairs (grid plus random rationals) with n <= 25; the two-sequence
//    form over 10 pair combinations with n <= 20.
bool identity_sweeps(std::string& detail) {
  if (!sweep_identity(IdentityKind::kCorollary1, {}, 30).pass) {
    detail = "corollary1 sweep failed";
    return false;
  }

  SeedList seeds;
  for (long a : {-2, -1, 0, 1, 2})
    for (long b : {-2, 0, 2}) seeds.emplace_back(a, b);
  for (const auto& pair : random_rational_pairs(10, 20260819)) seeds.push_back(pair);

  for (const auto& [alpha, beta] : seeds) {
    const FibSequence seq(alpha, beta);
    if (!sweep_identity(IdentityKind::kRuggles, {seq}, 25).pass) {
      detail = "ruggles failed at seeds (" + to_string(alpha) + ", " + to_string(beta) + ")";
      return false;
    }
    if (!sweep_identity(IdentityKind::kGg, {seq}, 25).pass) {
      detail = "gg failed at seeds (" + to_string(alpha) + ", " + to_string(beta) + ")";
      return false;
    }
  }

  for (int j = 0; j < 10; ++j) {
    const FibSequence a(seeds[j].first, seeds[j].second);
    const auto& [a2, b2] = seeds[(3 * j + 7) % seeds.size()];
    if (!sweep_identity(IdentityKind::kTwoSequence, {a, FibSequence(a2, b2)}, 20).pass) {
      detail = "two-seq failed at combination " + std::to_string(j);
      return false;
    }
  }
  return true;
}

// 5. Tower invariants over the seed grid: splitting-index independence and
//    the Fibonacci recurrence in n for k <= 6, n <= 15, plus the explicit
//    k = 1, 2, 3 ladder rebuilt from the base sequence alone.
bool tower_invariants(std::string& detail) {
  SeedList grid;
  const std::vector<Rational> axis = {-2, -1, 0, make_rational(1, 2), 1, 2};
  for (const auto& a : axis)
    for (const auto& b : axis) grid.emplace_back(a, b);

  for (const auto& [alpha, beta] : grid) {
    const XkTower tower(alpha, beta);
    for (int k = 1; k <= 6; ++k) {
      for (long n = 1; n <= 15; ++n) {
        if (!check_i_independence(tower, k, n).pass) {
          detail = "i-independence failed at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   " seeds (" + to_string(alpha) + ", " + to_string(beta) + ")";
          return false;
        }
      }
    }
    for (int k = -1; k <= 6; ++k) {
      if (!check_fib_in_n(tower, k, 15).pass) {
        detail = "fib-in-n failed at k=" + std::to_string(k) + " seeds (" + to_string(alpha) +
                 ", " + to_string(beta) + ")";
        return false;
      }
    }
  }

  const SeedList ladder_seeds = {{1, 1}, {2, 1}, {make_rational(1, 2), -2}, {0, 0}};
  for (const auto& [alpha, beta] : ladder_seeds) {
    const FibSequence seq(alpha, beta);
    const XkTower tower(alpha, beta);
    const auto g = [&seq](long n) { return seq.term(n); };
    // -> Rational forces evaluation; a deduced gmp expression template would
    // reference temporaries that die at lambda return
    const auto x0 = [&](long n) -> Rational { return beta * g(n) + alpha * g(n - 1); };
    const auto x1 = [&](long n, long i) -> Rational {
      return x0(n - i + 1) * g(i) + x0(n - i) * g(i - 1);
    };
    const auto x2 = [&](long n, long i) -> Rational {
      return x0(n - i + 1) * x0(i) + x0(n - i) * x0(i - 1);
    };
    for (long n = 1; n <= 10; ++n) {
      for (long i = 1; i <= n; ++i) {
        const Rational x3 = x1(n - i + 1, 1) * x0(i) + x1(n - i, 1) * x0(i - 1);
        if (x1(n, i) != tower.value(1, n) || x2(n, i) != tower.value(2, n) ||
            x3 != tower.value(3, n)) {
          detail = "ladder mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                   " seeds (" + to_string(alpha) + ", " + to_string(beta) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

// 6. The meta-Fibonacci property holds exactly for (0,0), (1,1), (-1,0) and
//    for nothing else; classify_seeds agrees with the direct check everywhere.
bool meta_characterization(std::string& detail) {
  const auto agrees = [&detail](const Rational& a, const Rational& b, bool expected) {
    const bool direct = check_meta_fib(XkTower(a, b), 5, 4).pass;
    if (direct != expected || classify_seeds(a, b) != expected) {
      detail = "disagreement at seeds (" + to_string(a) + ", " + to_string(b) + ")";
      return false;
    }
    return true;
  };

  for (const auto& [a, b] : SeedList{{0, 0}, {1, 1}, {-1, 0}}) {
    if (!agrees(a, b, true)) return false;
  }
  for (const auto& [a, b] : SeedList{{0, 1}, {2, 1}}) {
    if (!agrees(a, b, false)) return false;
  }

  int tested = 0;
  std::mt19937_64 rng(777);
  while (tested < 50) {
    const Rational a = make_rational(static_cast<long>(rng() % 19) - 9,
                                     static_cast<long>(rng() % 9) + 1);
    const Rational b = make_rational(static_cast<long>(rng() % 19) - 9,
                                     static_cast<long>(rng() % 9) + 1);
    if (classify_seeds(a, b)) continue;  // drew one of the three solutions
    if (!agrees(a, b, false)) return false;
    ++tested;
  }
  return true;
}

// 7. The symbolic expansions match their printed coefficient forms and the
//    seed system solves to exactly the three pairs.
bool symbolic_reproduction(std::string& detail) {
  if (expand_eq3() != eq3_printed_form()) {
    detail = "first expansion differs from its printed form";
    return false;
  }
  if (expand_eq4() != eq4_printed_form()) {
    detail = "second expansion differs from its printed form";
    return false;
  }
  const SeedSolutionSet solutions = solve_meta_system();
  const SeedSolutionSet expected = {{-1, 0}, {0, 0}, {1, 1}};
  if (solutions != expected) {
    detail = "solution set has " + std::to_string(solutions.size()) + " entries";
    return false;
  }
  return true;
}

// 8. The symbolic forms evaluate to the numeric tower values at 10 seed
//    pairs, and the classical-seed tower reproduces fib(n) at every level.
bool cross_module_coherence(std::string& detail) {
  SeedList seeds = {{0, 1}, {1, 1}, {2, 1}, {-1, 0}};
  for (const auto& pair : random_rational_pairs(6, 424243)) seeds.push_back(pair);

  const GLinearForm eq3 = expand_eq3();
  const GLinearForm eq4 = expand_eq4();
  for (const auto& [alpha, beta] : seeds) {
    const FibSequence seq(alpha, beta);
    const XkTower tower(alpha, beta);
    for (long n = 3; n <= 20; ++n) {
      if (eq3.eval(seq, n) != tower.value(1, n) + tower.value(0, n) ||
          eq4.eval(seq, n) != tower.value(2, n)) {
        detail = "symbolic/numeric mismatch at n=" + std::to_string(n) + " seeds (" +
                 to_string(alpha) + ", " + to_string(beta) + ")";
        return false;
      }
    }
  }

  const XkTower classical(0, 1);
  for (int k = -1; k <= 6; ++k) {
    for (long n = 0; n <= 20; ++n) {
      if (classical.value(k, n) != fib(n)) {
        detail = "classical tower != fib at k=" + std::to_string(k) + " n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

struct Criterion {
  const char* label;
  double budget_seconds;
  bool (*body)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"corona count law M = F_{n+2}", 10.0, corona_count_law},
      {"DP count matches enumeration oracle", 60.0, oracle_equivalence},
      {"per-position counts on path coronas", 30.0, per_position_results},
      {"identity sweeps across the ladder", 30.0, identity_sweeps},
      {"X^(k) tower invariants", 30.0, tower_invariants},
      {"meta-Fibonacci seed characterization", 30.0, meta_characterization},
      {"symbolic expansions and seed system", 5.0, symbolic_reproduction},
      {"symbolic/numeric coherence", 10.0, cross_module_coherence},
  };

  int failures = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = c.body(detail);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      detail = "budget of " + std::to_string(c.budget_seconds) + "s exceeded";
    }
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, c.label, elapsed,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
    return 1;
  }
  std::printf("all %zu criteria passed\n", std::size(criteria));
  return 0;
}
