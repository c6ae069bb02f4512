#include "fibtree/identity_report.hpp"

namespace fibtree {

nlohmann::ordered_json IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) p[key] = value;
  p["cases"] = cases;
  j["params"] = p;
  j["pass"] = pass;
  if (counterexample) {
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [key, value] : *counterexample) c[key] = value;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

IdentityReport IdentityReport::passed(std::string name, FieldList params, long long cases) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.pass = true;
  r.cases = cases;
  return r;
}

IdentityReport IdentityReport::failed(std::string name, FieldList params, FieldList counterexample,
                                      long long cases) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.pass = false;
  r.counterexample = std::move(counterexample);
  r.cases = cases;
  return r;
}

}  // namespace fibtree
