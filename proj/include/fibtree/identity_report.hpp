#ifndef FIBTREE_IDENTITY_REPORT_HPP
#define FIBTREE_IDENTITY_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fibtree {

// Ordered key -> exact-value-string pairs; the keys depend on the identity
// being checked (n, i, lhs, rhs for the algebraic ones; expected/actual for
// the counting ones).
using FieldList = std::vector<std::pair<std::string, std::string>>;

// Outcome of one identity verification. pass is true exactly when no
// counterexample was found.
struct IdentityReport {
  std::string identity;
  FieldList params;
  bool pass = true;
  std::optional<FieldList> counterexample;
  long long cases = 0;

  nlohmann::ordered_json to_json() const;

  static IdentityReport passed(std::string name, FieldList params, long long cases);
  static IdentityReport failed(std::string name, FieldList params, FieldList counterexample,
                               long long cases);
};

}  // namespace fibtree

#endif
