#include "turan/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "turan/constructions.hpp"
#include "turan/treelab.hpp"

namespace turan {

namespace {

constexpr int kMaxN = 16;
using Rows = std::array<std::uint32_t, kMaxN>;

// ---------------------------------------------------------------------------
// Raw containment checks on small bitmask rows. The enumeration maintains the
// invariant that parents are pattern-free, so checks for path patterns only
// look for copies through the newly added vertex.
// ---------------------------------------------------------------------------

// Any simple path on `len` vertices passing through v, using only `avail`.
bool path_through(const Rows& rows, std::uint32_t avail, int v, int len) {
  if (len == 1) return (avail >> v) & 1;
  struct Frame {
    std::uint32_t used;
    int left_tip, right_tip, left_need, right_need;
  };
  // Two arms from v; enumerate anchor positions up to reversal.
  for (int pos = 0; pos <= (len - 1) / 2; ++pos) {
    auto arms = [&](auto&& self, std::uint32_t used, int lt, int rt,
                    int ln, int rn) -> bool {
      if (ln == 0 && rn == 0) return true;
      bool on_left = ln > 0;
      int tip = on_left ? lt : rt;
      std::uint32_t cands = rows[static_cast<std::size_t>(tip)] & avail & ~used;
      while (cands) {
        int u = std::countr_zero(cands);
        cands &= cands - 1;
        bool ok = on_left ? self(self, used | (1u << u), u, rt, ln - 1, rn)
                          : self(self, used | (1u << u), lt, u, ln, rn - 1);
        if (ok) return true;
      }
      return false;
    };
    if (arms(arms, 1u << v, v, v, pos, len - 1 - pos)) return true;
  }
  return false;
}

// Greedy disjoint packing of paths on len vertices; returns the paths' union
// and the number found (stops at stop_at).
int greedy_path_packing(const Rows& rows, int n, std::uint32_t avail, int len,
                        int stop_at, std::uint32_t* used_union) {
  std::uint32_t blocked = 0;
  int found = 0;
  auto grab = [&](auto&& self, std::uint32_t used, int tip, int need) -> std::uint32_t {
    if (need == 0) return used;
    std::uint32_t cands =
        rows[static_cast<std::size_t>(tip)] & avail & ~blocked & ~used;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      std::uint32_t got = self(self, used | (1u << u), u, need - 1);
      if (got) return got;
    }
    return 0;
  };
  for (int s = 0; s < n && found < stop_at; ++s) {
    if (!((avail >> s) & 1) || ((blocked >> s) & 1)) continue;
    std::uint32_t got = len == 1 ? (1u << s) : grab(grab, 1u << s, s, len - 1);
    if (got) {
      blocked |= got;
      ++found;
    }
  }
  if (used_union) *used_union = blocked;
  return found;
}

// Exact disjoint-path packing decision within avail (k copies of P_len).
bool pack_paths(const Rows& rows, int n, std::uint32_t avail, int k, int len) {
  if (k == 0) return true;
  if (std::popcount(avail) < k * len) return false;
  // Anchor on the lowest available vertex: either some path uses it or it
  // can be discarded.
  int a = std::countr_zero(avail);
  auto arms = [&](auto&& self, std::uint32_t used, int lt, int rt, int ln,
                  int rn) -> bool {
    if (ln == 0 && rn == 0)
      return pack_paths(rows, n, avail & ~used, k - 1, len);
    bool on_left = ln > 0;
    int tip = on_left ? lt : rt;
    std::uint32_t cands = rows[static_cast<std::size_t>(tip)] & avail & ~used;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      bool ok = on_left ? self(self, used | (1u << u), u, rt, ln - 1, rn)
                        : self(self, used | (1u << u), lt, u, ln, rn - 1);
      if (ok) return true;
    }
    return false;
  };
  if (len == 1) {
    return pack_paths(rows, n, avail & ~(1u << a), k - 1, len);
  }
  for (int pos = 0; pos <= (len - 1) / 2; ++pos)
    if (arms(arms, 1u << a, a, a, pos, len - 1 - pos)) return true;
  return pack_paths(rows, n, avail & ~(1u << a), k, len);
}

// Forest embedding on raw rows; the pattern is preprocessed once per search.
// Since enumeration parents are pattern-free, a new copy must map some
// pattern vertex onto the freshly added graph vertex: plans[u] lists the
// components with u's component first, BFS-rooted at u, so the embedding can
// pin that root to the fresh vertex.
struct ForestPattern {
  using Plan = std::vector<std::vector<int>>;  // per component: parent
                                               // position, -1 for the root
  int total = 0;
  std::vector<Plan> plans;  // one per pattern vertex

  explicit ForestPattern(const Graph& f) {
    total = f.order();
    std::vector<int> comp_of(static_cast<std::size_t>(f.order()), -1);
    std::vector<std::vector<int>> comps;
    for (int r = 0; r < f.order(); ++r) {
      if (comp_of[static_cast<std::size_t>(r)] >= 0) continue;
      std::vector<int> queue = {r};
      comp_of[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      for (std::size_t i = 0; i < queue.size(); ++i)
        f.for_each_neighbor(queue[i], [&](int u) {
          if (comp_of[static_cast<std::size_t>(u)] < 0) {
            comp_of[static_cast<std::size_t>(u)] = static_cast<int>(comps.size());
            queue.push_back(u);
          }
        });
      comps.push_back(std::move(queue));
    }
    auto bfs_order = [&](int root, int ci) {
      std::vector<int> order = {root};
      std::vector<int> pos(static_cast<std::size_t>(f.order()), -1);
      pos[static_cast<std::size_t>(root)] = 0;
      std::vector<int> pp = {-1};
      for (std::size_t i = 0; i < order.size(); ++i)
        f.for_each_neighbor(order[i], [&](int u) {
          if (comp_of[static_cast<std::size_t>(u)] == ci &&
              pos[static_cast<std::size_t>(u)] < 0) {
            pos[static_cast<std::size_t>(u)] = static_cast<int>(order.size());
            order.push_back(u);
            pp.push_back(static_cast<int>(i));
          }
        });
      return pp;
    };
    for (int u = 0; u < f.order(); ++u) {
      Plan plan;
      int uc = comp_of[static_cast<std::size_t>(u)];
      plan.push_back(bfs_order(u, uc));
      for (std::size_t ci = 0; ci < comps.size(); ++ci)
        if (static_cast<int>(ci) != uc)
          plan.push_back(bfs_order(comps[ci][0], static_cast<int>(ci)));
      plans.push_back(std::move(plan));
    }
  }
};

// Embeds plan components in order; forced >= 0 pins the first component's
// root image.
bool embed_forest(const Rows& rows, std::uint32_t avail,
                  const ForestPattern::Plan& plan, std::size_t ci,
                  std::size_t pi, std::uint32_t used, std::vector<int>& stack,
                  int forced) {
  if (ci == plan.size()) return true;
  const auto& comp = plan[ci];
  if (pi == comp.size()) {
    std::vector<int> next_stack;
    return embed_forest(rows, avail & ~used, plan, ci + 1, 0, 0, next_stack,
                        forced);
  }
  std::uint32_t cands;
  if (comp[pi] < 0) {
    if (ci == 0 && forced >= 0)
      cands = (avail & ~used) & (1u << forced);
    else
      cands = avail & ~used;
  } else {
    cands = rows[static_cast<std::size_t>(stack[static_cast<std::size_t>(comp[pi])])] &
            avail & ~used;
  }
  while (cands) {
    int u = std::countr_zero(cands);
    cands &= cands - 1;
    stack.push_back(u);
    if (embed_forest(rows, avail, plan, ci, pi + 1, used | (1u << u), stack,
                     forced))
      return true;
    stack.pop_back();
  }
  return false;
}

// Containment oracle for enumeration children. `fresh` is the newly added
// vertex; parents are known pattern-free.
struct ChildChecker {
  const PatternSpec& p;
  bool certificates;
  std::unique_ptr<ForestPattern> fp;

  ChildChecker(const PatternSpec& p, bool certs) : p(p), certificates(certs) {
    if (p.kind() == PatternSpec::Kind::forest)
      fp = std::make_unique<ForestPattern>(p.forest());
  }

  bool contains(const Rows& rows, int n, int fresh) const {
    std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
    switch (p.kind()) {
      case PatternSpec::Kind::single_path:
        return path_through(rows, all, fresh, p.path_length());
      case PatternSpec::Kind::k_disjoint_paths: {
        int k = p.path_count(), l = p.path_length();
        if (n < k * l) return false;
        if (certificates) {
          std::uint32_t covered = 0;
          int g = greedy_path_packing(rows, n, all, l, k, &covered);
          if (g >= k) return true;
          // Every copy meets the greedy union; fewer than k vertices there
          // certify freeness.
          if (std::popcount(covered) < k) return false;
        }
        // Some copy must pass through the fresh vertex.
        struct Through {
          const Rows& rows;
          int n, k, l;
          bool run(std::uint32_t avail, int v) {
            auto arms = [&](auto&& self, std::uint32_t used, int lt, int rt,
                            int ln, int rn) -> bool {
              if (ln == 0 && rn == 0)
                return pack_paths(rows, n, avail & ~used, k - 1, l);
              bool on_left = ln > 0;
              int tip = on_left ? lt : rt;
              std::uint32_t cands =
                  rows[static_cast<std::size_t>(tip)] & avail & ~used;
              while (cands) {
                int u = std::countr_zero(cands);
                cands &= cands - 1;
                bool ok = on_left
                              ? self(self, used | (1u << u), u, rt, ln - 1, rn)
                              : self(self, used | (1u << u), lt, u, ln, rn - 1);
                if (ok) return true;
              }
              return false;
            };
            if (l == 1) return pack_paths(rows, n, avail & ~(1u << v), k - 1, l);
            for (int pos = 0; pos <= (l - 1) / 2; ++pos)
              if (arms(arms, 1u << v, v, v, pos, l - 1 - pos)) return true;
            return false;
          }
        };
        return Through{rows, n, k, l}.run(all, fresh);
      }
      case PatternSpec::Kind::forest: {
        if (fp->total > n) return false;
        std::vector<int> stack;
        for (const auto& plan : fp->plans) {
          stack.clear();
          if (embed_forest(rows, all, plan, 0, 0, 0, stack, fresh))
            return true;
        }
        return false;
      }
    }
    return false;
  }
};

Graph graph_from_rows(const Rows& rows, int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    std::uint32_t w = rows[static_cast<std::size_t>(u)] >> (u + 1);
    while (w) {
      int v = u + 1 + std::countr_zero(w);
      w &= w - 1;
      b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

struct SearchShared {
  std::atomic<long long> best{0};
  std::mutex mutex;
  std::set<GraphCode> witnesses;
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  long long max_nodes = -1;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;

  bool check_budget() {
    if (stop.load(std::memory_order_relaxed)) return false;
    long long seen = nodes.load(std::memory_order_relaxed);
    if (max_nodes >= 0 && seen > max_nodes) {
      budget_hit = true;
      stop = true;
      return false;
    }
    if (has_deadline && std::chrono::steady_clock::now() > deadline) {
      budget_hit = true;
      stop = true;
      return false;
    }
    return true;
  }

  void offer(long long m, GraphCode code) {
    std::lock_guard<std::mutex> lock(mutex);
    long long b = best.load(std::memory_order_relaxed);
    if (m > b) {
      best.store(m, std::memory_order_relaxed);
      witnesses.clear();
      witnesses.insert(std::move(code));
    } else if (m == b) {
      witnesses.insert(std::move(code));
    }
  }
};

struct Enumerator {
  int n;        // true target order, used for the edge bound
  int stop_at;  // children of this order are final for this enumerator
  const ChildChecker* checker;  // null: enumerate everything
  SearchShared& shared;
  bool dedup_final;
  std::function<void(const Graph&)> final_callback;

  // Upper bound on edges addable on top of an i-vertex graph.
  long long tail(int i) const {
    long long t = 0;
    for (int j = i; j < n; ++j) t += j;
    return t;
  }

  void expand(const Rows& rows, int i, long long m) {
    shared.nodes.fetch_add(1, std::memory_order_relaxed);
    if (!shared.check_budget()) return;
    bool final_level = i + 1 == stop_at;
    long long tail_after = tail(i + 1);
    std::set<GraphCode> seen_children;
    for (std::uint32_t s = 0; s < (1u << i); ++s) {
      if ((s & 1023u) == 1023u && !shared.check_budget()) return;
      long long m2 = m + std::popcount(s);
      if (checker &&
          m2 + tail_after < shared.best.load(std::memory_order_relaxed))
        continue;
      Rows child = rows;
      child[static_cast<std::size_t>(i)] = s;
      for (std::uint32_t bits = s; bits;) {
        int u = std::countr_zero(bits);
        bits &= bits - 1;
        child[static_cast<std::size_t>(u)] |= 1u << i;
      }
      if (checker && checker->contains(child, i + 1, i)) continue;
      if (final_level && !dedup_final) {
        if (m2 >= shared.best.load(std::memory_order_relaxed)) {
          Graph g = graph_from_rows(child, i + 1);
          shared.offer(m2, canonical_code(g));
        }
        continue;
      }
      Graph g = graph_from_rows(child, i + 1);
      GraphCode forced = canonical_code_forcing_last(g, i);
      if (!seen_children.insert(forced).second) continue;
      GraphCode canon = canonical_code(g);
      if (canon != forced) continue;
      if (final_level) {
        if (final_callback)
          final_callback(g);
        else if (checker)
          shared.offer(m2, std::move(canon));
        continue;
      }
      expand(child, i + 1, m2);
      if (shared.stop.load(std::memory_order_relaxed)) return;
    }
  }
};

std::string empty_graph_code_bytes() {
  return encode(Graph::empty_graph(0), GraphFormat::graph6);
}

SearchReport run_search(int n, const PatternSpec* p, const SearchBudget& budget,
                        const OracleOptions& options,
                        const std::function<void(const Graph&)>& callback) {
  auto t0 = std::chrono::steady_clock::now();
  SearchShared shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.wall_seconds >= 0) {
    shared.has_deadline = true;
    shared.deadline =
        t0 + std::chrono::microseconds(
                 static_cast<long long>(budget.wall_seconds * 1e6));
  }
  if (options.lower_bound_hint >= 0 && p)
    shared.best.store(options.lower_bound_hint, std::memory_order_relaxed);

  std::unique_ptr<ChildChecker> checker;
  if (p) checker = std::make_unique<ChildChecker>(*p, options.use_cover_certificates);

  SearchReport report;
  report.n = n;
  if (p) report.pattern = p->to_string();

  if (n == 0) {
    report.max_edges = 0;
    report.witnesses = {GraphCode{empty_graph_code_bytes()}};
    report.nodes_explored = 1;
    report.complete = true;
    return report;
  }

  Enumerator en{n, n, checker.get(), shared, callback != nullptr, callback};
  Rows root{};
  if (n == 1) {
    shared.nodes = 1;
    Graph g = graph_from_rows(root, 1);
    if (callback) callback(g);
    if (p) shared.offer(0, canonical_code(g));
  } else if (options.threads <= 1 || n <= 3) {
    en.expand(root, 1, 0);
  } else {
    // Sequential frontier, then subtree work queue across threads. Results
    // merge as set unions and max, so the thread count cannot change them.
    struct Item {
      Rows rows;
      long long m;
    };
    std::vector<Item> frontier = {{root, 0}};
    int depth = 1;
    long long upstream_nodes = 0;
    while (depth < n - 1 &&
           static_cast<int>(frontier.size()) < 4 * options.threads) {
      std::vector<Item> next;
      SearchShared probe;  // node budget applies later; the deadline now
      probe.best.store(shared.best.load(), std::memory_order_relaxed);
      probe.has_deadline = shared.has_deadline;
      probe.deadline = shared.deadline;
      // Collect canonical children one level down; the real target order
      // keeps the edge bound honest.
      Enumerator collect{n, depth + 1, checker.get(), probe, true,
                         [&](const Graph& g) {
                           Rows r{};
                           for (auto [u, v] : g.edges()) {
                             r[static_cast<std::size_t>(u)] |= 1u << v;
                             r[static_cast<std::size_t>(v)] |= 1u << u;
                           }
                           next.push_back({r, g.edge_count()});
                         }};
      for (auto& item : frontier) collect.expand(item.rows, depth, item.m);
      upstream_nodes += probe.nodes.load();
      if (probe.budget_hit.load()) {
        shared.budget_hit = true;
        shared.stop = true;
        break;
      }
      frontier = std::move(next);
      ++depth;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        std::size_t idx = cursor.fetch_add(1);
        if (idx >= frontier.size()) return;
        if (!shared.check_budget()) return;
        en.expand(frontier[idx].rows, depth, frontier[idx].m);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    shared.nodes.fetch_add(upstream_nodes);
  }

  report.max_edges = shared.best.load();
  report.witnesses.assign(shared.witnesses.begin(), shared.witnesses.end());
  report.nodes_explored = shared.nodes.load();
  report.complete = !shared.budget_hit.load();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (p && report.complete && report.witnesses.empty())
    throw Error(
        "search completed with no witnesses: the lower-bound hint exceeds the "
        "true maximum");
  return report;
}

int oracle_cap(const PatternSpec& p, const OracleOptions& options) {
  return p.kind() == PatternSpec::Kind::single_path ? options.max_n_single_path
                                                    : options.max_n_general;
}

}  // namespace

SearchReport exact_ex(int n, const PatternSpec& p, const SearchBudget& budget,
                      const OracleOptions& options) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (p.vertex_count() == 0)
    throw DomainError("pattern must have at least one vertex");
  if (n > oracle_cap(p, options))
    throw DomainError("n exceeds the oracle cap for this pattern kind");
  if (n > kMaxN) throw DomainError("oracle supports at most 16 vertices");
  return run_search(n, &p, budget, options, nullptr);
}

std::vector<Graph> extremal_graphs(int n, const PatternSpec& p,
                                   const SearchBudget& budget,
                                   const OracleOptions& options) {
  SearchReport report = exact_ex(n, p, budget, options);
  if (!report.complete)
    throw Error("search incomplete: extremal graphs are not determined");
  std::vector<Graph> out;
  for (const auto& code : report.witnesses)
    out.push_back(decode(code.bytes, GraphFormat::graph6));
  return out;
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n > 10) throw DomainError("graph enumeration capped at 10 vertices");
  if (n == 0) {
    fn(Graph::empty_graph(0));
    return;
  }
  SearchBudget unlimited;
  OracleOptions options;
  run_search(n, nullptr, unlimited, options, fn);
}

VerifyTable verify_formula_range(FormulaFamily family, const VerifyParams& params,
                                 int n_lo, int n_hi,
                                 const SearchBudget& per_n_budget,
                                 const OracleOptions& options) {
  VerifyTable table;
  for (int n = n_lo; n <= n_hi; ++n) {
    VerifyRow row;
    row.n = n;
    FormulaResult formula;
    Graph construction;
    PatternSpec pattern = PatternSpec::single_path(2);
    switch (family) {
      case FormulaFamily::k_p3:
        formula = ex_k_p3(n, params.k);
        construction = p3_extremal(n, params.k);
        pattern = params.k == 1
                      ? PatternSpec::single_path(3)
                      : PatternSpec::disjoint_paths(static_cast<int>(params.k), 3);
        break;
      case FormulaFamily::k_pl:
        formula = ex_k_pl(n, params.k, params.l);
        construction = pl_extremal(n, params.k, params.l);
        pattern = PatternSpec::disjoint_paths(static_cast<int>(params.k),
                                              static_cast<int>(params.l));
        break;
      case FormulaFamily::forest:
        if (!params.forest_h) throw DomainError("forest family needs a graph");
        formula = ex_equibipartite_forest(n, *params.forest_h);
        construction = forest_extremal(n, *params.forest_h);
        pattern = PatternSpec::forest_pattern(*params.forest_h);
        break;
    }
    row.formula_value = formula.value;
    row.in_proved_range = formula.in_proved_range;
    row.conditional_on_erdos_sos = formula.conditional_on_erdos_sos;
    row.construction_edges = construction.edge_count();

    if (n <= oracle_cap(pattern, options)) {
      OracleOptions opt = options;
      opt.lower_bound_hint = row.construction_edges;
      SearchReport report = exact_ex(n, pattern, per_n_budget, opt);
      if (report.complete) {
        row.oracle_value = report.max_edges;
        row.oracle_complete = true;
        row.relation = formula.value == report.max_edges
                           ? '='
                           : (formula.value < report.max_edges ? '<' : '>');
        if (row.relation == '>' && row.in_proved_range) row.contradiction = true;
      }
    }
    if (row.construction_edges > formula.value) row.contradiction = true;
    table.any_contradiction |= row.contradiction;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace turan
