// Command-line surface: formulas, constructions, containment checks, the
// exact oracle, and the verification suites. stdout carries data, stderr
// carries diagnostics; --json emits machine-readable output.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/treelab.hpp"
#include "turan/verify.hpp"

namespace {

using nlohmann::json;
using namespace turan;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 bytes start at '?' (63); edge lists start with a decimal digit.
Graph load_graph(const std::string& path) {
  std::string bytes = read_file(path);
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r') &&
         bytes.find(' ') == std::string::npos)
    bytes.pop_back();
  if (!bytes.empty() && bytes[0] >= '0' && bytes[0] <= '9')
    return decode(bytes, GraphFormat::edgelist);
  return decode(bytes, GraphFormat::graph6);
}

PatternSpec load_pattern(const std::string& text) {
  if (!text.empty() && text[0] == '@')
    return PatternSpec::forest_pattern(load_graph(text.substr(1)));
  return PatternSpec::parse(text);
}

json formula_json(const FormulaResult& r) {
  const char* kind = r.kind == BoundKind::exact
                         ? "exact"
                         : (r.kind == BoundKind::upper_bound ? "upper-bound"
                                                             : "lower-bound");
  return json{{"value", r.value},
              {"exact_rational", {{"num", r.exact_rational.num},
                                  {"den", r.exact_rational.den}}},
              {"in_proved_range", r.in_proved_range},
              {"conditional_on_erdos_sos", r.conditional_on_erdos_sos},
              {"kind", kind},
              {"citation", r.citation}};
}

void print_formula(const FormulaResult& r, bool as_json) {
  if (as_json) {
    std::cout << formula_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "value               " << r.value << "\n";
  if (r.exact_rational.den != 1)
    std::cout << "exact rational      " << r.exact_rational.num << "/"
              << r.exact_rational.den << "\n";
  std::cout << "in proved range     " << (r.in_proved_range ? "yes" : "no")
            << "\n";
  if (r.conditional_on_erdos_sos)
    std::cout << "conditional         on the Erdos-Sos conjecture\n";
  std::cout << "citation            " << r.citation << "\n";
}

json witness_json(const Witness& w) {
  json out = json::array();
  for (const auto& comp : w.components) out.push_back(comp);
  return out;
}

int cmd_formula(const std::string& subject, long long n, long long k,
                long long l, const std::string& h_path, bool as_json) {
  FormulaResult r;
  if (subject == "kp3") {
    r = ex_k_p3(n, k);
  } else if (subject == "kpl") {
    r = ex_k_pl(n, k, l);
  } else if (subject == "forest") {
    r = ex_equibipartite_forest(n, load_graph(h_path));
  } else if (subject == "eg-bound") {
    r = erdos_gallai_bound(n, l);
  } else if (subject == "gorgol") {
    r = gorgol_lower_p3(n, k);
  } else {
    throw DomainError("unknown formula subject: " + subject);
  }
  print_formula(r, as_json);
  return 0;
}

int cmd_construct(const std::string& family, long long n, long long k,
                  long long l, const std::string& h_path,
                  const std::string& g_path, long long v,
                  const std::string& which, const std::string& format_name,
                  const std::string& out_path, bool check, bool as_json) {
  Graph g;
  PatternSpec avoided = PatternSpec::single_path(2);
  bool have_pattern = true;
  if (family == "p3") {
    g = p3_extremal(n, k);
    avoided = k == 1 ? PatternSpec::single_path(3)
                     : PatternSpec::disjoint_paths(static_cast<int>(k), 3);
  } else if (family == "pl") {
    g = pl_extremal(n, k, l);
    avoided = PatternSpec::disjoint_paths(static_cast<int>(k),
                                          static_cast<int>(l));
  } else if (family == "eg") {
    g = erdos_gallai_extremal(n, l);
    avoided = PatternSpec::single_path(static_cast<int>(l));
  } else if (family == "forest") {
    Graph h = load_graph(h_path);
    g = forest_extremal(n, h);
    avoided = PatternSpec::forest_pattern(h);
  } else if (family == "gorgol") {
    if (g_path.empty())
      throw DomainError("the gorgol family needs --g (single-copy extremal graph)");
    Graph base = load_graph(g_path);
    GorgolKind kind = which == "join" ? GorgolKind::join_construction
                                      : GorgolKind::union_construction;
    g = gorgol_construction(n, k, base, v, kind);
    have_pattern = false;  // the avoided graph is whatever `base` avoids
  } else {
    throw DomainError("unknown construction family: " + family);
  }
  if (check && !have_pattern)
    throw DomainError(
        "--check is not available for the gorgol family (the avoided pattern "
        "depends on --g)");
  GraphFormat format = format_name == "edgelist" ? GraphFormat::edgelist
                                                 : GraphFormat::graph6;
  std::string bytes = encode(g, format);
  if (format == GraphFormat::graph6) bytes += "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + out_path);
    out << bytes;
  }
  bool free_of_pattern = false;
  if (check && have_pattern)
    free_of_pattern = !contains_pattern(g, avoided);
  if (as_json) {
    json j{{"family", family},
           {"n", g.order()},
           {"edges", g.edge_count()},
           {"format", format_name}};
    if (!out_path.empty()) j["out"] = out_path;
    else j["graph"] = encode(g, GraphFormat::graph6);
    if (check) {
      j["avoids"] = avoided.to_string();
      j["free"] = free_of_pattern;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << g.edge_count() << " edges on " << g.order() << " vertices\n";
    if (out_path.empty() && !check) std::cout << encode(g, GraphFormat::graph6) << "\n";
    if (check)
      std::cout << "free of " << avoided.to_string() << ": "
                << (free_of_pattern ? "yes" : "NO") << "\n";
  }
  if (check && !free_of_pattern) return 1;
  return 0;
}

int cmd_check(const std::string& graph_path, const std::string& pattern_text,
              bool as_json) {
  Graph g = load_graph(graph_path);
  PatternSpec p = load_pattern(pattern_text);
  Witness w;
  bool contains = contains_pattern(g, p, &w);
  if (as_json) {
    json j{{"graph", graph_path},
           {"pattern", p.to_string()},
           {"contains", contains}};
    if (contains) j["witness"] = witness_json(w);
    std::cout << j.dump(2) << "\n";
  } else if (contains) {
    std::cout << "contains " << p.to_string() << "\n";
    for (const auto& comp : w.components) {
      std::cout << "  copy:";
      for (int v : comp) std::cout << " " << v;
      std::cout << "\n";
    }
  } else {
    std::cout << "free of " << p.to_string() << "\n";
  }
  return contains ? 1 : 0;
}

int cmd_oracle(int n, const std::string& pattern_text, long long budget_nodes,
               double budget_seconds, int threads, long long hint,
               bool as_json) {
  PatternSpec p = load_pattern(pattern_text);
  SearchBudget budget;
  budget.max_nodes = budget_nodes;
  budget.wall_seconds = budget_seconds;
  OracleOptions options;
  options.threads = threads;
  options.lower_bound_hint = hint;
  SearchReport r = exact_ex(n, p, budget, options);
  if (as_json) {
    json wit = json::array();
    for (const auto& code : r.witnesses) wit.push_back(code.bytes);
    json j{{"n", r.n},
           {"pattern", r.pattern},
           {"max_edges", r.max_edges},
           {"witnesses", wit},
           {"nodes_explored", r.nodes_explored},
           {"wall_seconds", r.wall_seconds},
           {"complete", r.complete}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ex(" << r.n << ", " << r.pattern << ") "
              << (r.complete ? "=" : ">=") << " " << r.max_edges << "\n";
    std::cout << "witnesses (" << r.witnesses.size() << "):";
    for (const auto& code : r.witnesses) std::cout << " " << code.bytes;
    std::cout << "\nnodes " << r.nodes_explored << ", "
              << r.wall_seconds << " s"
              << (r.complete ? "" : " [budget exhausted, incomplete]") << "\n";
  }
  return r.complete ? 0 : 2;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options,
               bool as_json, bool as_csv) {
  std::vector<SuiteReport> reports;
  if (suite == "p3" || suite == "all") reports.push_back(verify_p3_suite(options));
  if (suite == "pl" || suite == "all") reports.push_back(verify_pl_suite(options));
  if (suite == "eg" || suite == "all") reports.push_back(verify_eg_suite(options));
  if (suite == "trees" || suite == "all")
    reports.push_back(verify_trees_suite(options));
  if (reports.empty()) throw DomainError("unknown suite: " + suite);

  bool all_pass = true;
  for (const auto& r : reports) all_pass &= r.pass();

  if (as_json) {
    json out = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (as_csv) {
    std::cout << "suite,check,pass,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks) {
        std::string detail = c.detail;
        for (auto& ch : detail)
          if (ch == ',') ch = ';';
        std::cout << r.suite << "," << c.name << ","
                  << (c.pass ? "pass" : "FAIL") << "," << detail << "\n";
      }
  } else {
    for (const auto& r : reports) {
      std::cout << "suite " << r.suite << "\n";
      for (const auto& c : r.checks)
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("TURAN_VERTEX_CAP")) {
    try {
      set_graph_vertex_cap(std::stoi(cap));
    } catch (const std::exception&) {
      std::cerr << "invalid TURAN_VERTEX_CAP, keeping default\n";
    }
  }

  CLI::App app{"Turan numbers for disjoint paths and equibipartite forests"};
  app.set_help_flag("--help", "print help");  // frees --h for forest files
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string subject, family, h_path, graph_path, pattern_text, out_path;
  std::string format_name = "graph6";
  long long n = 0, k = 1, l = 0;
  bool check = false;

  auto* formula = app.add_subcommand("formula", "evaluate a formula");
  formula->fallthrough();
  formula->add_option("subject", subject, "kp3 | kpl | forest | eg-bound | gorgol")
      ->required();
  formula->add_option("--n", n, "vertex count")->required();
  formula->add_option("--k", k, "number of disjoint copies");
  formula->add_option("--l", l, "path length (vertices)");
  formula->add_option("--h", h_path, "forest graph file (graph6 or edge list)");

  std::string g_path, which = "union";
  long long v = 1;
  auto* construct = app.add_subcommand("construct", "build an extremal graph");
  construct->fallthrough();
  construct->add_option("family", family, "p3 | pl | eg | forest | gorgol")
      ->required();
  construct->add_option("--n", n, "vertex count")->required();
  construct->add_option("--k", k, "number of disjoint copies");
  construct->add_option("--l", l, "path length (vertices)");
  construct->add_option("--h", h_path, "forest graph file");
  construct->add_option("--g", g_path, "single-copy extremal graph (gorgol)");
  construct->add_option("--v", v, "vertex count of the avoided graph (gorgol)");
  construct->add_option("--which", which, "union | join (gorgol)");
  construct->add_option("--format", format_name, "graph6 | edgelist");
  construct->add_option("--out", out_path, "output file");
  construct->add_flag("--check", check, "confirm freeness with the detector");

  auto* chk = app.add_subcommand("check", "test a graph for a forbidden pattern");
  chk->fallthrough();
  chk->add_option("--graph", graph_path, "graph file")->required();
  chk->add_option("--forbid", pattern_text, "k*Pl | Pl | @forest-file")
      ->required();

  long long budget_nodes = -1, hint = -1;
  double budget_seconds = -1;
  int threads = 1, oracle_n = 0;
  auto* oracle = app.add_subcommand("oracle", "exact ex(n, pattern) search");
  oracle->fallthrough();
  oracle->add_option("--n", oracle_n, "vertex count")->required();
  oracle->add_option("--forbid", pattern_text, "k*Pl | Pl | @forest-file")
      ->required();
  oracle->add_option("--budget-nodes", budget_nodes, "node budget (-1: off)");
  oracle->add_option("--budget-seconds", budget_seconds, "time budget (-1: off)");
  oracle->add_option("--threads", threads, "worker threads");
  oracle->add_option("--hint", hint, "attainable lower bound to seed pruning");

  std::string suite;
  bool as_csv = false;
  int verify_n_max = -1, verify_l = -1;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", suite, "p3 | pl | eg | trees | all")->required();
  verify->add_option("--threads", vopt.threads, "oracle threads");
  verify->add_option("--n-max", verify_n_max,
                     "max n for the suite's oracle comparisons");
  verify->add_option("--max-vertices", vopt.trees_max_vertices,
                     "tree size cap for the lemma checks");
  verify->add_option("--l", verify_l, "restrict the eg suite to one l");
  verify->add_flag("--csv", as_csv, "CSV output");

  CLI11_PARSE(app, argc, argv);

  if (verify_n_max > 0) {
    vopt.p3_oracle_n_hi = verify_n_max;
    vopt.p3_stretch_n = 0;
    vopt.eg_n_max = verify_n_max;
    vopt.es_n_max = std::min(verify_n_max, 9);
  }
  if (verify_l > 0) {
    vopt.eg_l_lo = verify_l;
    vopt.eg_l_hi = verify_l;
  }

  try {
    if (formula->parsed()) return cmd_formula(subject, n, k, l, h_path, as_json);
    if (construct->parsed())
      return cmd_construct(family, n, k, l, h_path, g_path, v, which,
                           format_name, out_path, check, as_json);
    if (chk->parsed()) return cmd_check(graph_path, pattern_text, as_json);
    if (oracle->parsed())
      return cmd_oracle(oracle_n, pattern_text, budget_nodes, budget_seconds,
                        threads, hint, as_json);
    if (verify->parsed()) return cmd_verify(suite, vopt, as_json, as_csv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
