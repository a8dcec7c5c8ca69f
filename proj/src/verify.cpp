#include "turan/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "turan/constructions.hpp"
#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/treelab.hpp"

namespace turan {

namespace {

std::string fmt(long long v) { return std::to_string(v); }

void add_check(SuiteReport& report, const std::string& name, bool pass,
               std::string detail = "") {
  report.checks.push_back({name, pass, std::move(detail)});
}

long long ceil_rational(const Rational& r) {
  Rational neg(-r.num, r.den);
  return -neg.floor();
}

// All simple paths on `len` vertices, one orientation per copy.
std::vector<std::vector<int>> all_path_copies(const Graph& g, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto dfs = [&](auto&& self, int last) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (path.front() < path.back()) out.push_back(path);
      return;
    }
    g.for_each_neighbor(last, [&](int u) {
      if (used[static_cast<std::size_t>(u)]) return;
      used[static_cast<std::size_t>(u)] = true;
      path.push_back(u);
      self(self, u);
      path.pop_back();
      used[static_cast<std::size_t>(u)] = false;
    });
  };
  for (int s = 0; s < g.order(); ++s) {
    path = {s};
    used.assign(static_cast<std::size_t>(g.order()), false);
    used[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s);
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// A 2.P4-free instance: either a random subgraph of the extremal graph or a
// random graph repaired by deleting an edge of each found packing.
Graph fuzz_2p4_free(int n, std::mt19937_64& rng) {
  PatternSpec two_p4 = PatternSpec::disjoint_paths(2, 4);
  if (rng() % 2 == 0 && n >= 5) {
    Graph base = pl_extremal(n, 2, 4);
    std::bernoulli_distribution keep(0.8);
    GraphBuilder b(n);
    for (auto [u, v] : base.edges())
      if (keep(rng)) b.add_edge(u, v);
    Graph g = std::move(b).build();
    if (!contains_pattern(g, two_p4)) return g;
  }
  Graph g = random_graph(n, 0.3, rng);
  Witness w;
  while (contains_pattern(g, two_p4, &w)) {
    // Drop one random edge of the found packing.
    std::vector<std::pair<int, int>> packing_edges;
    for (const auto& path : w.components)
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        packing_edges.emplace_back(path[i], path[i + 1]);
    auto [du, dv] = packing_edges[rng() % packing_edges.size()];
    GraphBuilder b(n);
    for (auto [u, v] : g.edges())
      if (!(u == std::min(du, dv) && v == std::max(du, dv))) b.add_edge(u, v);
    g = std::move(b).build();
  }
  return g;
}

}  // namespace

std::vector<Graph> enumerate_equibipartite_forests(int two_l) {
  if (two_l < 4 || two_l % 2 != 0)
    throw DomainError("forest vertex count must be even and at least 4");
  // Component sizes 2, 4, ..., two_l - 2; multisets assembled in
  // nondecreasing (size, index) order.
  std::map<int, std::vector<Graph>> trees;
  for (int s = 2; s <= two_l - 2; s += 2)
    trees[s] = enumerate_equibipartite_trees(s);
  std::vector<Graph> out;
  std::vector<const Graph*> parts;
  auto build = [&](auto&& self, int remaining, int min_size,
                   std::size_t min_index) -> void {
    if (remaining == 0) {
      if (parts.size() < 2) return;
      Graph f = Graph::empty_graph(0);
      for (const Graph* t : parts) f = disjoint_union(f, *t);
      out.push_back(f);
      return;
    }
    for (int s = min_size; s <= remaining; s += 2) {
      const auto& pool = trees[s];
      for (std::size_t i = (s == min_size ? min_index : 0); i < pool.size();
           ++i) {
        parts.push_back(&pool[i]);
        self(self, remaining - s, s, i);
        parts.pop_back();
      }
    }
  };
  build(build, two_l, 2, 0);
  return out;
}

SuiteReport verify_p3_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "p3";
  OracleOptions oracle_opt;
  oracle_opt.threads = options.threads;

  // Oracle equality with the piecewise lower bound (proved exact for k = 2).
  for (int n = options.p3_oracle_n_lo; n <= options.p3_oracle_n_hi; ++n) {
    long long expected = gorgol_lower_p3(n, 2).value;
    // Both lower-bound constructions are 2*P3-free; the better one seeds the
    // search.
    Graph union_graph =
        disjoint_union(Graph::complete(5), Graph::matching(n - 5));
    Graph join_graph = p3_extremal(n, 2);
    OracleOptions opt = oracle_opt;
    opt.lower_bound_hint =
        std::max(union_graph.edge_count(), join_graph.edge_count());
    SearchReport r = exact_ex(n, PatternSpec::disjoint_paths(2, 3), {}, opt);
    bool ok = r.complete && r.max_edges == expected;
    add_check(report,
              "exact_ex(" + fmt(n) + ", 2*P3) == gorgol_lower_p3(" + fmt(n) +
                  ", 2)",
              ok, "bound " + fmt(expected) + ", oracle " + fmt(r.max_edges));
  }
  // The theorem expression coincides with the second lower-bound piece.
  {
    bool ok = true;
    for (int k = 1; k <= options.p3_k_max; ++k)
      for (int n = 5 * k - 1; n <= options.p3_n_max; ++n)
        ok &= ex_k_p3(n, k).value == gorgol_lower_p3(n, k).value;
    add_check(report, "theorem value equals the lower bound for n >= 5k-1", ok);
  }

  // Optional stretch: one budget-capped point past the required range.
  if (options.p3_stretch_n > options.p3_oracle_n_hi) {
    int n = options.p3_stretch_n;
    OracleOptions opt = oracle_opt;
    opt.lower_bound_hint = p3_extremal(n, 2).edge_count();
    SearchBudget budget;
    budget.max_nodes = 2000000;
    budget.wall_seconds = 120;
    SearchReport r = exact_ex(n, PatternSpec::disjoint_paths(2, 3), budget, opt);
    long long expected = gorgol_lower_p3(n, 2).value;
    bool ok = !r.complete || r.max_edges == expected;
    add_check(report,
              "stretch: exact_ex(" + fmt(n) + ", 2*P3) (budget-capped)", ok,
              r.complete ? "oracle " + fmt(r.max_edges) + ", bound " + fmt(expected)
                         : "budget exhausted (not compared)");
  }

  // Construction grid: edge counts match the formula exactly and the
  // detector confirms freeness.
  for (int k = 1; k <= options.p3_k_max; ++k) {
    bool edges_ok = true, free_ok = true;
    std::string bad;
    for (int n = k; n <= options.p3_n_max; ++n) {
      Graph g = p3_extremal(n, k);
      if (n >= 3 * k && g.edge_count() != ex_k_p3(n, k).value) {
        edges_ok = false;
        bad = "edge count mismatch at n=" + fmt(n);
        break;
      }
      PatternSpec p = k == 1 ? PatternSpec::single_path(3)
                             : PatternSpec::disjoint_paths(k, 3);
      if (contains_pattern(g, p)) {
        free_ok = false;
        bad = "contains " + p.to_string() + " at n=" + fmt(n);
        break;
      }
    }
    add_check(report,
              "p3_extremal edges == formula, k=" + fmt(k) + ", n<=" +
                  fmt(options.p3_n_max),
              edges_ok, bad);
    add_check(report,
              "p3_extremal is " + fmt(k) + "*P3-free, n<=" +
                  fmt(options.p3_n_max),
              free_ok, bad);
  }
  return report;
}

SuiteReport verify_pl_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "pl";
  OracleOptions oracle_opt;
  oracle_opt.threads = options.threads;

  for (int k : options.pl_ks) {
    for (int l : options.pl_ls) {
      long long t = static_cast<long long>(k) * (l / 2) - 1;
      bool edges_ok = true, free_ok = true;
      std::string bad;
      for (int n = static_cast<int>(t) + 2; n <= options.pl_n_max; ++n) {
        Graph g = pl_extremal(n, k, l);
        if (g.edge_count() != ex_k_pl(n, k, l).value) {
          edges_ok = false;
          bad = "edge count mismatch at n=" + fmt(n);
          break;
        }
        if (contains_pattern(g, PatternSpec::disjoint_paths(k, l))) {
          free_ok = false;
          bad = "contains " + fmt(k) + "*P" + fmt(l) + " at n=" + fmt(n);
          break;
        }
      }
      add_check(report,
                "pl_extremal edges == formula (+c_l), k=" + fmt(k) +
                    ", l=" + fmt(l),
                edges_ok, bad);
      add_check(report,
                "pl_extremal is " + fmt(k) + "*P" + fmt(l) + "-free, n<=" +
                    fmt(options.pl_n_max),
                free_ok, bad);
    }
  }

  // Oracle lower-bound consistency where the oracle is reachable.
  {
    bool ok = true;
    std::string bad;
    for (int k : options.pl_ks) {
      for (int l : options.pl_ls) {
        long long t = static_cast<long long>(k) * (l / 2) - 1;
        for (int n = static_cast<int>(t) + 2;
             n <= std::min(options.pl_oracle_n_max, 12); ++n) {
          Graph g = pl_extremal(n, k, l);
          OracleOptions opt = oracle_opt;
          opt.lower_bound_hint = g.edge_count();
          SearchReport r =
              exact_ex(n, PatternSpec::disjoint_paths(k, l), {}, opt);
          if (r.complete && r.max_edges < g.edge_count()) {
            ok = false;
            bad = "oracle below construction at n=" + fmt(n) + ", k=" + fmt(k) +
                  ", l=" + fmt(l);
          }
        }
      }
    }
    add_check(report, "oracle >= construction on reachable instances", ok, bad);
  }

  // Codegree-guarantee fuzz: on 2.P4-free instances every P4 copy has a
  // 2-subset whose codegree meets the bound.
  {
    std::mt19937_64 rng(options.badlemma_seed);
    std::map<int, long long> ex_p4_cache;
    for (int n = 0; n <= options.badlemma_n_max - 4; ++n)
      ex_p4_cache[n] =
          n < 2 ? 0 : exact_ex(n, PatternSpec::single_path(4), {}, {}).max_edges;
    bool ok = true;
    long long checked_copies = 0;
    std::string bad;
    for (int i = 0; i < options.badlemma_instances && ok; ++i) {
      int n = 8 + static_cast<int>(rng() % 5);
      if (n > options.badlemma_n_max) n = options.badlemma_n_max;
      Graph g = fuzz_2p4_free(n, rng);
      Rational bound =
          badlemma_bound(n, g.edge_count(), 4, 2, ex_p4_cache[n - 4]);
      long long need = ceil_rational(bound);
      for (const auto& copy : all_path_copies(g, 4)) {
        Witness w;
        w.components = {copy};
        auto [subset, codeg] = find_high_codegree_subset(g, w, 2);
        ++checked_copies;
        if (codeg < need) {
          ok = false;
          bad = "instance " + fmt(i) + ": copy codegree " + fmt(codeg) +
                " below bound " + fmt(need);
          break;
        }
      }
    }
    add_check(report,
              "codegree bound realized on " + fmt(options.badlemma_instances) +
                  " fuzzed 2*P4-free instances",
              ok, ok ? fmt(checked_copies) + " copies checked" : bad);
  }

  // Even-l remark: the gap to the single-long-path bound is independent
  // of n.
  {
    bool ok = true;
    std::string bad;
    for (int k : options.pl_ks) {
      for (int l : options.pl_ls) {
        if (l % 2 != 0) continue;
        long long t = static_cast<long long>(k) * (l / 2) - 1;
        int n1 = std::max<int>(static_cast<int>(t) + 2, 3 * k * l);
        int n2 = n1 + 17;
        auto gap = [&](int n) {
          return erdos_gallai_bound(n, static_cast<long long>(k) * l)
                     .exact_rational.floor() -
                 ex_k_pl(n, k, l).value;
        };
        if (gap(n1) != gap(n2) || gap(n1) != t * (t + 1) / 2) {
          ok = false;
          bad = "gap varies for k=" + fmt(k) + ", l=" + fmt(l);
        }
      }
    }
    add_check(report, "even-l gap to the single-path bound is n-independent",
              ok, bad);
  }
  return report;
}

SuiteReport verify_eg_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "eg";
  OracleOptions oracle_opt;
  oracle_opt.threads = options.threads;
  for (int l = options.eg_l_lo; l <= options.eg_l_hi; ++l) {
    bool bound_ok = true, tight_ok = true;
    std::string bad;
    for (int n = l - 1; n <= options.eg_n_max; ++n) {
      Graph construction = erdos_gallai_extremal(n, l);
      OracleOptions opt = oracle_opt;
      opt.lower_bound_hint = construction.edge_count();
      SearchReport r = exact_ex(n, PatternSpec::single_path(l), {}, opt);
      long long eg = erdos_gallai_bound(n, l).value;
      if (!r.complete || r.max_edges > eg) {
        bound_ok = false;
        bad = "ex(" + fmt(n) + ",P" + fmt(l) + ") = " + fmt(r.max_edges) +
              " > bound " + fmt(eg);
      }
      if (n % (l - 1) == 0 && r.complete && r.max_edges != eg) {
        tight_ok = false;
        bad = "no equality at divisible n=" + fmt(n);
      }
    }
    add_check(report, "ex(n,P" + fmt(l) + ") <= (l-2)n/2 for n<=" +
                          fmt(options.eg_n_max),
              bound_ok, bad);
    add_check(report, "equality whenever " + fmt(l - 1) + " | n", tight_ok, bad);
  }

  // The disjoint-clique construction never hosts a path on l vertices.
  {
    bool ok = true;
    std::string bad;
    for (int l = 2; l <= 8; ++l)
      for (int n = 0; n <= 40; ++n) {
        Graph g = erdos_gallai_extremal(n, l);
        int lp = longest_path(g);
        if (lp > l - 1 && n > 0) {
          ok = false;
          bad = "longest path " + fmt(lp) + " at n=" + fmt(n) + ", l=" + fmt(l);
        }
      }
    add_check(report, "disjoint cliques have longest path <= l-1 (n<=40, l<=8)",
              ok, bad);
  }
  return report;
}

SuiteReport verify_trees_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "trees";
  OracleOptions oracle_opt;
  oracle_opt.threads = options.threads;

  // Exhaustive lemma checks over all equibipartite trees.
  {
    long long pm_count = 0, nopm_count = 0;
    bool perf_ok = true, cert_ok = true;
    std::string bad;
    for (int two_l = 2; two_l <= options.trees_max_vertices; two_l += 2) {
      for (const Graph& t : enumerate_equibipartite_trees(two_l)) {
        if (has_perfect_matching(t)) {
          ++pm_count;
          if (!check_all_unequal_partitions(t)) {
            perf_ok = false;
            bad = "perfect-matching tree with an independent larger class, " +
                  encode(t, GraphFormat::graph6);
          }
        } else {
          ++nopm_count;
          try {
            PartitionCert cert = nopm_partition(t);
            long long small_edges = 0;
            std::vector<bool> in_small(static_cast<std::size_t>(t.order()), false);
            for (int v : cert.small_class)
              in_small[static_cast<std::size_t>(v)] = true;
            for (auto [u, v] : t.edges())
              if (in_small[static_cast<std::size_t>(u)] &&
                  in_small[static_cast<std::size_t>(v)])
                ++small_edges;
            bool valid =
                cert.small_class.size() < cert.large_class.size() &&
                static_cast<int>(cert.small_class.size()) < two_l / 2 &&
                small_edges == 1 &&
                t.has_edge(cert.small_edge.first, cert.small_edge.second);
            if (!valid) {
              cert_ok = false;
              bad = "invalid certificate for " + encode(t, GraphFormat::graph6);
            }
          } catch (const Error& e) {
            cert_ok = false;
            bad = std::string("certificate construction failed: ") + e.what();
          }
        }
      }
    }
    add_check(report,
              "perfect matching => every unequal partition's larger class "
              "induces an edge (<=" +
                  fmt(options.trees_max_vertices) + " vertices)",
              perf_ok, fmt(pm_count) + " trees");
    add_check(report,
              "no perfect matching => valid two-class certificate (<=" +
                  fmt(options.trees_max_vertices) + " vertices)",
              cert_ok, bad.empty() ? fmt(nopm_count) + " trees" : bad);
  }

  // Forest constructions: edge counts match the formula and the detector
  // confirms h-freeness.
  {
    bool edges_ok = true, free_ok = true;
    long long pairs = 0;
    std::string bad;
    for (int two_l = 4; two_l <= options.forest_h_max_vertices && edges_ok &&
                        free_ok;
         two_l += 2) {
      for (const Graph& h : enumerate_equibipartite_forests(two_l)) {
        int l = two_l / 2;
        for (int n = l; n <= options.forest_n_max; ++n) {
          Graph g = forest_extremal(n, h);
          if (g.edge_count() != ex_equibipartite_forest(n, h).value) {
            edges_ok = false;
            bad = "edge mismatch, h=" + encode(h, GraphFormat::graph6) +
                  ", n=" + fmt(n);
            break;
          }
          ++pairs;
          if (contains_pattern(g, PatternSpec::forest_pattern(h))) {
            free_ok = false;
            bad = "construction contains h=" + encode(h, GraphFormat::graph6) +
                  " at n=" + fmt(n);
            break;
          }
        }
        if (!edges_ok || !free_ok) break;
      }
    }
    add_check(report, "forest_extremal edges == formula (h <= " +
                          fmt(options.forest_h_max_vertices) + " vertices)",
              edges_ok, bad);
    add_check(report, "forest_extremal is h-free (n <= " +
                          fmt(options.forest_n_max) + ")",
              free_ok, bad.empty() ? fmt(pairs) + " pairs" : bad);
  }

  // Erdos-Sos spot checks at oracle scale.
  {
    bool ok = true;
    std::string bad;
    long long runs = 0;
    for (int size = 2; size <= options.es_tree_max_vertices; ++size) {
      for (const Graph& t : enumerate_trees(size)) {
        for (int n = 1; n <= options.es_n_max; ++n) {
          Graph hint_graph = erdos_gallai_extremal(n, size);
          OracleOptions opt = oracle_opt;
          opt.lower_bound_hint = hint_graph.edge_count();
          SearchReport r =
              exact_ex(n, PatternSpec::forest_pattern(t), {}, opt);
          ++runs;
          long long bound = Rational((size - 2) * n, 2).floor();
          if (!r.complete || r.max_edges > bound) {
            ok = false;
            bad = "ex(" + fmt(n) + ", T) = " + fmt(r.max_edges) + " > " +
                  fmt(bound) + " for T=" + encode(t, GraphFormat::graph6);
          }
        }
      }
    }
    add_check(report,
              "ex(n,T) <= (|T|-2)n/2 for all trees |T| <= " +
                  fmt(options.es_tree_max_vertices) + ", n <= " +
                  fmt(options.es_n_max),
              ok, ok ? fmt(runs) + " oracle runs" : bad);
  }
  return report;
}

}  // namespace turan
