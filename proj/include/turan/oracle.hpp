// Exact computation of ex(n, pattern) with all extremal witnesses up to
// isomorphism, by canonical-augmentation enumeration (one representative per
// isomorphism class) with containment and edge-bound pruning.
#ifndef TURAN_ORACLE_HPP
#define TURAN_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SearchBudget {
  long long max_nodes = -1;   // -1: unlimited
  double wall_seconds = -1;   // -1: unlimited
};

struct OracleOptions {
  int threads = 1;
  // Edge count of a known pattern-free graph on n vertices, used to seed
  // the bound. Must be attainable; -1 disables.
  long long lower_bound_hint = -1;
  // Greedy packing / cover-certificate shortcut for containment checks.
  bool use_cover_certificates = true;
  int max_n_general = 12;
  int max_n_single_path = 14;
};

struct SearchReport {
  int n = 0;
  std::string pattern;
  long long max_edges = 0;
  std::vector<GraphCode> witnesses;  // sorted, one per isomorphism class
  long long nodes_explored = 0;
  double wall_seconds = 0;
  bool complete = true;
};

// Exact ex(n, p). On a complete run, max_edges is exact and witnesses hold
// every extremal graph up to isomorphism; a budget-exhausted run reports
// complete = false with best-so-far values. max_edges and the witness set of
// complete runs do not depend on thread count.
SearchReport exact_ex(int n, const PatternSpec& p,
                      const SearchBudget& budget = {},
                      const OracleOptions& options = {});

// Decoded witnesses of a completed search; throws if the search is
// incomplete.
std::vector<Graph> extremal_graphs(int n, const PatternSpec& p,
                                   const SearchBudget& budget = {},
                                   const OracleOptions& options = {});

// Every graph on n vertices, one representative per isomorphism class.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn);

enum class FormulaFamily { k_p3, k_pl, forest };

struct VerifyParams {
  long long k = 0;
  long long l = 0;
  const Graph* forest_h = nullptr;
};

struct VerifyRow {
  int n = 0;
  long long formula_value = 0;
  bool in_proved_range = false;
  bool conditional_on_erdos_sos = false;
  long long construction_edges = -1;
  long long oracle_value = -1;  // -1: oracle not run / capped
  bool oracle_complete = false;
  char relation = 'n';  // formula vs oracle: '=', '<', '>', or 'n' (n/a)
  bool contradiction = false;
};

struct VerifyTable {
  std::vector<VerifyRow> rows;
  bool any_contradiction = false;
};

// One row per n: formula value, construction edge count, oracle value where
// the oracle is reachable (otherwise the construction serves as a lower
// bound). A formula exceeding a complete oracle value inside the proved
// range is a contradiction and flags the table.
VerifyTable verify_formula_range(FormulaFamily family, const VerifyParams& params,
                                 int n_lo, int n_hi,
                                 const SearchBudget& per_n_budget = {},
                                 const OracleOptions& options = {});

}  // namespace turan

#endif  // TURAN_ORACLE_HPP
