#include "fibtree/cli_app.hpp"

#include "fibtree/fib_sequence.hpp"
#include "fibtree/identities.hpp"
#include "fibtree/identity_report.hpp"
#include "fibtree/mis.hpp"
#include "fibtree/rational.hpp"
#include "fibtree/symbolic.hpp"
#include "fibtree/tree.hpp"
#include "fibtree/tree_export.hpp"
#include "fibtree/xk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fibtree {

namespace {

enum class Format { kHuman, kJson, kTsv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "tsv") return Format::kTsv;
  return Format::kHuman;
}

void write_json_doc(std::ostream& out, const nlohmann::ordered_json& doc) {
  out << doc.dump() << "\n";
}

void write_tsv_rows(std::ostream& out, const FieldList& rows) {
  for (const auto& [key, value] : rows) out << key << "\t" << value << "\n";
}

std::string join_fields(const FieldList& fields) {
  std::string text;
  for (const auto& [key, value] : fields) {
    if (!text.empty()) text += " ";
    text += key + "=" + value;
  }
  return text;
}

int emit_report(const IdentityReport& report, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kJson:
      write_json_doc(out, report.to_json());
      break;
    case Format::kTsv: {
      FieldList rows = {{"identity", report.identity},
                        {"pass", report.pass ? "true" : "false"},
                        {"cases", std::to_string(report.cases)}};
      for (const auto& [key, value] : report.params) rows.emplace_back("param." + key, value);
      if (report.counterexample)
        for (const auto& [key, value] : *report.counterexample)
          rows.emplace_back("counterexample." + key, value);
      write_tsv_rows(out, rows);
      break;
    }
    case Format::kHuman:
      if (report.pass) {
        out << "PASS " << report.identity << " [" << join_fields(report.params) << "] "
            << report.cases << " cases\n";
      } else {
        out << "FAIL " << report.identity << " [" << join_fields(report.params)
            << "] counterexample: " << join_fields(*report.counterexample) << "\n";
      }
      break;
  }
  return report.pass ? 0 : 1;
}

bool write_text_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << content;
  return static_cast<bool>(f);
}

int cmd_tree_build(int n, const std::string& dot_path, const std::string& json_path, Format fmt,
                   std::ostream& out, std::ostream& err) {
  const ExpandedTree g = expanded_path(n);
  if (!dot_path.empty() && !write_text_file(dot_path, export_dot(g), err)) return 2;
  if (!json_path.empty() && !write_text_file(json_path, export_json(g).dump() + "\n", err))
    return 2;

  const int vertices = g.graph().vertex_count();
  const int edges = g.graph().edge_count();
  switch (fmt) {
    case Format::kJson:
      write_json_doc(out, export_json(g));
      break;
    case Format::kTsv:
      write_tsv_rows(out, {{"n", std::to_string(n)},
                           {"vertices", std::to_string(vertices)},
                           {"edges", std::to_string(edges)}});
      break;
    case Format::kHuman:
      out << "expanded path: core n=" << n << ", " << vertices << " vertices, " << edges
          << " edges\n";
      if (!dot_path.empty()) out << "wrote " << dot_path << "\n";
      if (!json_path.empty()) out << "wrote " << json_path << "\n";
      break;
  }
  return 0;
}

// Enumeration-backed commands refuse cores whose expansion exceeds the cap
// unless --dp-only skips the cross-check.
bool over_cap(const ExpandedTree& g, int cap, std::ostream& err) {
  if (g.graph().vertex_count() <= cap) return false;
  err << "error: " << g.graph().vertex_count() << " vertices exceed the enumeration cap " << cap
      << "; pass --dp-only or raise --cap\n";
  return true;
}

int cmd_mis_count(int n, int cap, bool dp_only, Format fmt, std::ostream& out, std::ostream& err) {
  const ExpandedTree g = expanded_path(n);
  const Int count = count_mis(g.graph());
  bool cross_checked = false;
  if (!dp_only) {
    if (over_cap(g, cap, err)) return 2;
    const MISFamily family = enumerate_mis(g.graph(), cap);
    cross_checked = true;
    if (Int(family.size()) != count) {
      IdentityReport mismatch = IdentityReport::failed(
          "mis-count-cross-check", {{"n", std::to_string(n)}},
          {{"enumeration", std::to_string(family.size())}, {"dp", count.get_str()}}, 1);
      return emit_report(mismatch, fmt, out);
    }
  }
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["n"] = n;
      doc["count"] = count.get_str();
      doc["cross_checked"] = cross_checked;
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      write_tsv_rows(out, {{"n", std::to_string(n)},
                           {"count", count.get_str()},
                           {"cross_checked", cross_checked ? "true" : "false"}});
      break;
    case Format::kHuman:
      out << "M = " << count.get_str() << (cross_checked ? " (enumeration agrees)" : "") << "\n";
      break;
  }
  return 0;
}

int cmd_mis_enumerate(int n, int cap, Format fmt, std::ostream& out) {
  const ExpandedTree g = expanded_path(n);
  const MISFamily family = enumerate_mis(g.graph(), cap);
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["n"] = n;
      doc["count"] = family.size();
      doc["sets"] = family;
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      for (const auto& set : family) {
        for (std::size_t j = 0; j < set.size(); ++j) out << (j ? "\t" : "") << set[j];
        out << "\n";
      }
      break;
    case Format::kHuman:
      out << family.size() << " maximal independent sets\n";
      for (const auto& set : family) {
        out << "{";
        for (std::size_t j = 0; j < set.size(); ++j) out << (j ? ", " : "") << set[j];
        out << "}\n";
      }
      break;
  }
  return 0;
}

int cmd_mis_lambda(int n, int i, const std::string& kind_name, int cap, bool dp_only, Format fmt,
                   std::ostream& out, std::ostream& err) {
  const PositionKind kind = kind_name == "core" ? PositionKind::kCore : PositionKind::kLeaf;
  const ExpandedTree g = expanded_path(n);
  const SideCounts sc = side_counts(g, i, kind);
  const VertexId x = kind == PositionKind::kCore ? g.core_vertex(i) : g.leaf_of(i);
  bool cross_checked = false;
  if (!dp_only) {
    if (over_cap(g, cap, err)) return 2;
    const MISFamily family = enumerate_mis(g.graph(), cap);
    Int direct = 0;
    for (const auto& set : family)
      if (std::binary_search(set.begin(), set.end(), x)) ++direct;
    cross_checked = true;
    if (direct != sc.lambda) {
      IdentityReport mismatch = IdentityReport::failed(
          "mis-lambda-cross-check",
          {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"kind", kind_name}},
          {{"enumeration", direct.get_str()}, {"l*r", sc.lambda.get_str()}}, 1);
      return emit_report(mismatch, fmt, out);
    }
  }
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["n"] = n;
      doc["i"] = i;
      doc["kind"] = kind_name;
      doc["l"] = sc.l.get_str();
      doc["r"] = sc.r.get_str();
      doc["lambda"] = sc.lambda.get_str();
      doc["cross_checked"] = cross_checked;
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      write_tsv_rows(out, {{"n", std::to_string(n)},
                           {"i", std::to_string(i)},
                           {"kind", kind_name},
                           {"l", sc.l.get_str()},
                           {"r", sc.r.get_str()},
                           {"lambda", sc.lambda.get_str()},
                           {"cross_checked", cross_checked ? "true" : "false"}});
      break;
    case Format::kHuman:
      out << "lambda(" << (kind == PositionKind::kCore ? "v" : "z") << i
          << ") = " << sc.lambda.get_str() << " (l = " << sc.l.get_str()
          << ", r = " << sc.r.get_str() << ")"
          << (cross_checked ? " (enumeration agrees)" : "") << "\n";
      break;
  }
  return 0;
}

int cmd_verify_sanders(int n_max, Format fmt, std::ostream& out, std::ostream& err) {
  if (n_max < 3) {
    err << "error: --n-max must be at least 3\n";
    return 2;
  }
  const FieldList params = {{"n_min", "3"}, {"n_max", std::to_string(n_max)}};
  long long cases = 0;
  for (int n = 3; n <= n_max; ++n) {
    IdentityReport r = verify_sanders_results(n);
    cases += r.cases;
    if (!r.pass)
      return emit_report(
          IdentityReport::failed(r.identity, params, std::move(*r.counterexample), cases), fmt,
          out);
  }
  return emit_report(IdentityReport::passed("sanders-results", params, cases), fmt, out);
}

int cmd_verify_identity(const std::string& which, const std::string& alpha,
                        const std::string& beta, bool has_second, const std::string& alpha2,
                        const std::string& beta2, long n_max, Format fmt, std::ostream& out,
                        std::ostream& err) {
  const IdentityKind kind = identity_kind_from_string(which);
  if (n_max < 1) {
    err << "error: --n-max must be at least 1\n";
    return 2;
  }
  std::vector<FibSequence> seqs;
  if (kind != IdentityKind::kCorollary1)
    seqs.emplace_back(parse_rational(alpha), parse_rational(beta));
  if (kind == IdentityKind::kTwoSequence) {
    if (!has_second) {
      err << "error: two-seq needs --alpha2 and --beta2\n";
      return 2;
    }
    seqs.emplace_back(parse_rational(alpha2), parse_rational(beta2));
  }
  return emit_report(sweep_identity(kind, seqs, n_max), fmt, out);
}

int cmd_xk_value(const std::string& alpha, const std::string& beta, int k, long n, Format fmt,
                 std::ostream& out) {
  const XkTower tower(parse_rational(alpha), parse_rational(beta));
  const Rational value = tower.value(k, n);
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["alpha"] = to_string(tower.base().alpha());
      doc["beta"] = to_string(tower.base().beta());
      doc["k"] = k;
      doc["n"] = n;
      doc["value"] = to_string(value);
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      write_tsv_rows(out, {{"k", std::to_string(k)},
                           {"n", std::to_string(n)},
                           {"value", to_string(value)}});
      break;
    case Format::kHuman:
      out << "X^(" << k << ")_" << n << " = " << to_string(value) << "\n";
      break;
  }
  return 0;
}

int cmd_xk_table(const std::string& alpha, const std::string& beta, int k_max, long n_max,
                 Format fmt, std::ostream& out, std::ostream& err) {
  if (k_max < -1 || n_max < 0) {
    err << "error: need --k-max >= -1 and --n-max >= 0\n";
    return 2;
  }
  const XkTower tower(parse_rational(alpha), parse_rational(beta));
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["alpha"] = to_string(tower.base().alpha());
      doc["beta"] = to_string(tower.base().beta());
      doc["k_max"] = k_max;
      doc["n_max"] = n_max;
      auto rows = nlohmann::ordered_json::array();
      for (int k = -1; k <= k_max; ++k) {
        nlohmann::ordered_json row;
        row["k"] = k;
        auto values = nlohmann::ordered_json::array();
        for (long n = 0; n <= n_max; ++n) values.push_back(to_string(tower.value(k, n)));
        row["values"] = std::move(values);
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      for (int k = -1; k <= k_max; ++k) {
        out << k;
        for (long n = 0; n <= n_max; ++n) out << "\t" << to_string(tower.value(k, n));
        out << "\n";
      }
      break;
    case Format::kHuman:
      for (int k = -1; k <= k_max; ++k) {
        out << "k=" << k << ":";
        for (long n = 0; n <= n_max; ++n) out << " " << to_string(tower.value(k, n));
        out << "\n";
      }
      break;
  }
  return 0;
}

int cmd_xk_meta(const std::string& alpha, const std::string& beta, int k_max, long n, Format fmt,
                std::ostream& out) {
  const XkTower tower(parse_rational(alpha), parse_rational(beta));
  return emit_report(check_meta_fib(tower, k_max, n), fmt, out);
}

std::string g_label(int j) {
  return j == 0 ? "G_n" : "G_{n-" + std::to_string(j) + "}";
}

int cmd_symbolic_eq(int which, Format fmt, std::ostream& out) {
  const GLinearForm derived = which == 3 ? expand_eq3() : expand_eq4();
  const GLinearForm printed = which == 3 ? eq3_printed_form() : eq4_printed_form();
  const bool pass = derived == printed;
  const int width = static_cast<int>(std::max(derived.coeffs().size(), printed.coeffs().size()));
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["equation"] = which == 3 ? "eq3" : "eq4";
      auto coeffs = nlohmann::ordered_json::array();
      for (int j = 0; j < width; ++j) {
        nlohmann::ordered_json c;
        c["g_shift"] = j;
        c["poly"] = derived.coeff(j).str();
        c["terms"] = derived.coeff(j).to_json();
        coeffs.push_back(std::move(c));
      }
      doc["coefficients"] = std::move(coeffs);
      doc["pass"] = pass;
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv: {
      FieldList rows;
      for (int j = 0; j < width; ++j) rows.emplace_back(g_label(j), derived.coeff(j).str());
      rows.emplace_back("pass", pass ? "true" : "false");
      write_tsv_rows(out, rows);
      break;
    }
    case Format::kHuman:
      for (int j = 0; j < width; ++j)
        out << g_label(j) << ": " << derived.coeff(j).str() << "\n";
      out << (pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return pass ? 0 : 1;
}

int cmd_symbolic_solve(Format fmt, std::ostream& out) {
  const SeedSolutionSet solutions = solve_meta_system();
  const auto system = derive_meta_system();
  bool pass = solutions.size() == 3;
  for (const auto& [a, b] : solutions)
    for (const auto& eq : system)
      if (eq.eval(a, b) != 0) pass = false;
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& [a, b] : solutions)
        arr.push_back(nlohmann::ordered_json::array({to_string(a), to_string(b)}));
      doc["solutions"] = std::move(arr);
      doc["pass"] = pass;
      write_json_doc(out, doc);
      break;
    }
    case Format::kTsv:
      for (const auto& [a, b] : solutions) out << to_string(a) << "\t" << to_string(b) << "\n";
      break;
    case Format::kHuman:
      for (const auto& [a, b] : solutions)
        out << "(" << to_string(a) << ", " << to_string(b) << ")\n";
      break;
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximal-independent-set counts on expanded trees and the"
               " generalized Fibonacci identity tower"};
  app.name("fibtree");
  app.require_subcommand(1);

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json", "tsv"}));

  // Options not matched by a subcommand (notably --format) fall through to
  // the parent.
  const auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* c_tree = add_sub(&app, "tree", "Expanded-tree construction and export");
  c_tree->require_subcommand(1);
  int tb_n = 0;
  std::string tb_dot, tb_json;
  CLI::App* c_tree_build = add_sub(c_tree, "build", "Build the expanded path");
  c_tree_build->add_option("--n", tb_n, "Core path length")->required();
  c_tree_build->add_option("--dot", tb_dot, "Write Graphviz DOT here");
  c_tree_build->add_option("--json", tb_json, "Write JSON serialization here");

  CLI::App* c_mis = add_sub(&app, "mis", "Maximal independent set counting");
  c_mis->require_subcommand(1);
  int mc_n = 0, mc_cap = kDefaultEnumerationCap;
  bool mc_dp_only = false;
  CLI::App* c_mis_count = add_sub(c_mis, "count", "Count maximal independent sets");
  c_mis_count->add_option("--n", mc_n, "Core path length")->required();
  c_mis_count->add_option("--cap", mc_cap, "Enumeration cross-check cap (vertices)");
  c_mis_count->add_flag("--dp-only", mc_dp_only, "Skip the enumeration cross-check");

  int me_n = 0, me_cap = kDefaultEnumerationCap;
  CLI::App* c_mis_enum = add_sub(c_mis, "enumerate", "List every maximal independent set");
  c_mis_enum->add_option("--n", me_n, "Core path length")->required();
  c_mis_enum->add_option("--cap", me_cap, "Enumeration cap (vertices)");

  int ml_n = 0, ml_i = 0, ml_cap = kDefaultEnumerationCap;
  bool ml_dp_only = false;
  std::string ml_kind;
  CLI::App* c_mis_lambda = add_sub(c_mis, "lambda", "Per-vertex count lambda = l * r");
  c_mis_lambda->add_option("--n", ml_n, "Core path length")->required();
  c_mis_lambda->add_option("--i", ml_i, "Central position")->required();
  c_mis_lambda->add_option("--kind", ml_kind, "core or leaf")
      ->required()
      ->check(CLI::IsMember({"core", "leaf"}));
  c_mis_lambda->add_option("--cap", ml_cap, "Enumeration cross-check cap (vertices)");
  c_mis_lambda->add_flag("--dp-only", ml_dp_only, "Skip the enumeration cross-check");

  CLI::App* c_verify = add_sub(&app, "verify", "Verification sweeps");
  c_verify->require_subcommand(1);
  int vs_n_max = 0;
  CLI::App* c_verify_sanders = add_sub(c_verify, "sanders", "Check the three path-corona results");
  c_verify_sanders->add_option("--n-max", vs_n_max, "Largest core path length")->required();

  std::string vi_which, vi_alpha = "0", vi_beta = "1", vi_alpha2, vi_beta2;
  long vi_n_max = 0;
  CLI::App* c_verify_identity = add_sub(c_verify, "identity", "Sweep a Fibonacci identity");
  c_verify_identity->add_option("--which", vi_which, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"ruggles", "corollary1", "gg", "two-seq"}));
  c_verify_identity->add_option("--alpha", vi_alpha, "Seed G_0 (rational)");
  c_verify_identity->add_option("--beta", vi_beta, "Seed G_1 (rational)");
  CLI::Option* opt_alpha2 =
      c_verify_identity->add_option("--alpha2", vi_alpha2, "Second-sequence seed G'_0");
  c_verify_identity->add_option("--beta2", vi_beta2, "Second-sequence seed G'_1")
      ->needs(opt_alpha2);
  c_verify_identity->add_option("--n-max", vi_n_max, "Largest n of the sweep")->required();

  CLI::App* c_xk = add_sub(&app, "xk", "Iterated X^(k) generalization");
  c_xk->require_subcommand(1);
  std::string xv_alpha, xv_beta;
  int xv_k = 0;
  long xv_n = 0;
  CLI::App* c_xk_value = add_sub(c_xk, "value", "One tower value X^(k)_n");
  c_xk_value->add_option("--alpha", xv_alpha, "Seed G_0 (rational)")->required();
  c_xk_value->add_option("--beta", xv_beta, "Seed G_1 (rational)")->required();
  c_xk_value->add_option("--k", xv_k, "Level, >= -1")->required();
  c_xk_value->add_option("--n", xv_n, "Index")->required();

  std::string xt_alpha = "0", xt_beta = "1";
  int xt_k_max = 0;
  long xt_n_max = 0;
  CLI::App* c_xk_table = add_sub(c_xk, "table", "Tower values for k <= k-max, n <= n-max");
  c_xk_table->add_option("--k-max", xt_k_max, "Largest level")->required();
  c_xk_table->add_option("--n-max", xt_n_max, "Largest index")->required();
  c_xk_table->add_option("--alpha", xt_alpha, "Seed G_0 (rational)");
  c_xk_table->add_option("--beta", xt_beta, "Seed G_1 (rational)");

  std::string xm_alpha, xm_beta;
  int xm_k_max = 0;
  long xm_n = 0;
  CLI::App* c_xk_meta = add_sub(c_xk, "meta", "Check X^(k) = X^(k-1) + X^(k-2) in k");
  c_xk_meta->add_option("--alpha", xm_alpha, "Seed G_0 (rational)")->required();
  c_xk_meta->add_option("--beta", xm_beta, "Seed G_1 (rational)")->required();
  c_xk_meta->add_option("--k-max", xm_k_max, "Largest level, >= 2")->required();
  c_xk_meta->add_option("--n", xm_n, "Index, >= 2")->required();

  CLI::App* c_symbolic = add_sub(&app, "symbolic", "Exact polynomial checks");
  c_symbolic->require_subcommand(1);
  CLI::App* c_sym_eq3 = add_sub(c_symbolic, "eq3", "Derive the first expansion");
  CLI::App* c_sym_eq4 = add_sub(c_symbolic, "eq4", "Derive the second expansion");
  CLI::App* c_sym_solve = add_sub(c_symbolic, "solve-meta", "Solve the seed system");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = parse_format(format_name);
  try {
    if (c_tree_build->parsed()) return cmd_tree_build(tb_n, tb_dot, tb_json, fmt, out, err);
    if (c_mis_count->parsed()) return cmd_mis_count(mc_n, mc_cap, mc_dp_only, fmt, out, err);
    if (c_mis_enum->parsed()) return cmd_mis_enumerate(me_n, me_cap, fmt, out);
    if (c_mis_lambda->parsed())
      return cmd_mis_lambda(ml_n, ml_i, ml_kind, ml_cap, ml_dp_only, fmt, out, err);
    if (c_verify_sanders->parsed()) return cmd_verify_sanders(vs_n_max, fmt, out, err);
    if (c_verify_identity->parsed())
      return cmd_verify_identity(vi_which, vi_alpha, vi_beta,
                                 c_verify_identity->count("--alpha2") > 0, vi_alpha2, vi_beta2,
                                 vi_n_max, fmt, out, err);
    if (c_xk_value->parsed()) return cmd_xk_value(xv_alpha, xv_beta, xv_k, xv_n, fmt, out);
    if (c_xk_table->parsed())
      return cmd_xk_table(xt_alpha, xt_beta, xt_k_max, xt_n_max, fmt, out, err);
    if (c_xk_meta->parsed()) return cmd_xk_meta(xm_alpha, xm_beta, xm_k_max, xm_n, fmt, out);
    if (c_sym_eq3->parsed()) return cmd_symbolic_eq(3, fmt, out);
    if (c_sym_eq4->parsed()) return cmd_symbolic_eq(4, fmt, out);
    if (c_sym_solve->parsed()) return cmd_symbolic_solve(fmt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace fibtree
