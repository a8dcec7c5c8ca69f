// Verification suites: formula-vs-oracle equality at small n, construction
// edge counts and detector-checked freeness over parameter grids, the
// exhaustive tree-lemma checks, and the codegree-guarantee fuzz harness.
#ifndef TURAN_VERIFY_HPP
#define TURAN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/oracle.hpp"

namespace turan {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int threads = 1;

  // kP3: oracle equality range and construction grid.
  int p3_oracle_n_lo = 6;
  int p3_oracle_n_hi = 9;
  int p3_stretch_n = 10;  // budget-capped extra point; <= n_hi disables
  int p3_n_max = 60;
  int p3_k_max = 4;

  // kPl: construction grid and the codegree fuzz harness.
  int pl_n_max = 60;
  std::vector<int> pl_ks = {2, 3};
  std::vector<int> pl_ls = {4, 5, 6};
  int pl_oracle_n_max = 9;
  int badlemma_instances = 500;
  int badlemma_n_max = 12;
  std::uint64_t badlemma_seed = 0x5eedbadu;

  // Erdos-Gallai: oracle grid.
  int eg_l_lo = 4;
  int eg_l_hi = 7;
  int eg_n_max = 10;

  // Trees: exhaustive lemma range, forest construction grid, Erdos-Sos spot
  // checks.
  int trees_max_vertices = 12;
  int forest_h_max_vertices = 10;
  int forest_n_max = 40;
  int es_tree_max_vertices = 6;
  int es_n_max = 9;
};

// All equibipartite forests with >= 2 tree components on exactly two_l
// vertices, up to isomorphism.
std::vector<Graph> enumerate_equibipartite_forests(int two_l);

SuiteReport verify_p3_suite(const VerifyOptions& options = {});
SuiteReport verify_pl_suite(const VerifyOptions& options = {});
SuiteReport verify_eg_suite(const VerifyOptions& options = {});
SuiteReport verify_trees_suite(const VerifyOptions& options = {});

}  // namespace turan

#endif  // TURAN_VERIFY_HPP
