#include "fibtree/identities.hpp"

#include <stdexcept>

namespace fibtree {

namespace {

void require_index_range(long n, long i) {
  if (i < 1 || i > n) {
    throw std::out_of_range("index i=" + std::to_string(i) + " outside [1, n] with n=" +
                            std::to_string(n));
  }
}

FieldList seed_params(const FibSequence& seq, long n, long i) {
  return {{"alpha", to_string(seq.alpha())},
          {"beta", to_string(seq.beta())},
          {"n", std::to_string(n)},
          {"i", std::to_string(i)}};
}

IdentityReport report_equality(std::string name, FieldList params, long n, long i,
                               const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) {
    return IdentityReport::passed(std::move(name), std::move(params), 1);
  }
  FieldList cx = {{"n", std::to_string(n)},
                  {"i", std::to_string(i)},
                  {"lhs", to_string(lhs)},
                  {"rhs", to_string(rhs)}};
  return IdentityReport::failed(std::move(name), std::move(params), std::move(cx), 1);
}

}  // namespace

IdentityReport check_ruggles(const FibSequence& seq, long n, long i) {
  require_index_range(n, i);
  const Rational lhs = seq.term(n);
  const Rational rhs = seq.term(n - i + 1) * fib(i) + seq.term(n - i) * fib(i - 1);
  return report_equality("ruggles", seed_params(seq, n, i), n, i, lhs, rhs);
}

IdentityReport check_corollary1(long n, long i) {
  require_index_range(n, i);
  const Rational lhs = fib(n);
  const Rational rhs = fib(n - i + 1) * fib(i) + fib(n - i) * fib(i - 1);
  return report_equality("corollary1", {{"n", std::to_string(n)}, {"i", std::to_string(i)}}, n, i,
                         lhs, rhs);
}

IdentityReport check_gg(const FibSequence& seq, long n, long i) {
  require_index_range(n, i);
  const Rational lhs = seq.beta() * seq.term(n) + seq.alpha() * seq.term(n - 1);
  const Rational rhs = seq.term(n - i + 1) * seq.term(i) + seq.term(n - i) * seq.term(i - 1);
  return report_equality("gg", seed_params(seq, n, i), n, i, lhs, rhs);
}

IdentityReport check_two_sequence(const FibSequence& seq_a, const FibSequence& seq_b, long n,
                                  long i) {
  require_index_range(n, i);
  const Rational lhs = seq_b.beta() * seq_a.term(n) + seq_b.alpha() * seq_a.term(n - 1);
  const Rational rhs =
      seq_a.term(n - i + 1) * seq_b.term(i) + seq_a.term(n - i) * seq_b.term(i - 1);
  FieldList params = {{"alpha", to_string(seq_a.alpha())},
                      {"beta", to_string(seq_a.beta())},
                      {"alpha2", to_string(seq_b.alpha())},
                      {"beta2", to_string(seq_b.beta())},
                      {"n", std::to_string(n)},
                      {"i", std::to_string(i)}};
  return report_equality("two-seq", std::move(params), n, i, lhs, rhs);
}

IdentityKind identity_kind_from_string(const std::string& name) {
  if (name == "ruggles") return IdentityKind::kRuggles;
  if (name == "corollary1") return IdentityKind::kCorollary1;
  if (name == "gg") return IdentityKind::kGg;
  if (name == "two-seq") return IdentityKind::kTwoSequence;
  throw std::invalid_argument("unknown identity id: '" + name + "'");
}

std::string identity_kind_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::kRuggles: return "ruggles";
    case IdentityKind::kCorollary1: return "corollary1";
    case IdentityKind::kGg: return "gg";
    case IdentityKind::kTwoSequence: return "two-seq";
  }
  return "?";
}

IdentityReport sweep_identity(IdentityKind which, const std::vector<FibSequence>& seqs,
                              long n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }
  const std::size_t needed = which == IdentityKind::kCorollary1 ? 0
                             : which == IdentityKind::kTwoSequence ? 2
                                                                   : 1;
  if (seqs.size() != needed) {
    throw std::invalid_argument("identity '" + identity_kind_name(which) + "' takes " +
                                std::to_string(needed) + " seed pair(s), got " +
                                std::to_string(seqs.size()));
  }

  FieldList params;
  const char* seed_keys[] = {"alpha", "beta", "alpha2", "beta2"};
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    params.emplace_back(seed_keys[2 * s], to_string(seqs[s].alpha()));
    params.emplace_back(seed_keys[2 * s + 1], to_string(seqs[s].beta()));
  }
  params.emplace_back("n_max", std::to_string(n_max));

  long long cases = 0;
  for (long n = 1; n <= n_max; ++n) {
    for (long i = 1; i <= n; ++i) {
      IdentityReport single = [&] {
        switch (which) {
          case IdentityKind::kRuggles: return check_ruggles(seqs[0], n, i);
          case IdentityKind::kCorollary1: return check_corollary1(n, i);
          case IdentityKind::kGg: return check_gg(seqs[0], n, i);
          case IdentityKind::kTwoSequence: return check_two_sequence(seqs[0], seqs[1], n, i);
        }
        throw std::logic_error("unreachable");
      }();
      ++cases;
      if (!single.pass) {
        return IdentityReport::failed(identity_kind_name(which), std::move(params),
                                      std::move(*single.counterexample), cases);
      }
    }
  }
  return IdentityReport::passed(identity_kind_name(which), std::move(params), cases);
}

}  // namespace fibtree
