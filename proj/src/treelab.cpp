#include "turan/treelab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace turan {

namespace {

// Component ids by BFS, in order of discovery from ascending roots.
std::vector<int> component_ids(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int c = 0;
  for (int root = 0; root < g.order(); ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    std::queue<int> q;
    q.push(root);
    comp[static_cast<std::size_t>(root)] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      g.for_each_neighbor(v, [&](int u) {
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = c;
          q.push(u);
        }
      });
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

// 2-coloring; nullopt if some component has an odd cycle.
std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (color[static_cast<std::size_t>(root)] >= 0) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    bool ok = true;
    while (!q.empty() && ok) {
      int v = q.front();
      q.pop();
      g.for_each_neighbor(v, [&](int u) {
        if (color[static_cast<std::size_t>(u)] < 0) {
          color[static_cast<std::size_t>(u)] =
              1 - color[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (color[static_cast<std::size_t>(u)] ==
                   color[static_cast<std::size_t>(v)]) {
          ok = false;
        }
      });
    }
    if (!ok) return std::nullopt;
  }
  return color;
}

// Maximum bipartite matching (augmenting paths). match[v] = partner or -1.
std::vector<int> max_bipartite_matching(const Graph& g,
                                        const std::vector<int>& color) {
  int n = g.order();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> visited(static_cast<std::size_t>(n), -1);
  int stamp = 0;

  auto augment = [&](auto&& self, int a) -> bool {
    for (int b : g.neighbors(a)) {
      if (visited[static_cast<std::size_t>(b)] == stamp) continue;
      visited[static_cast<std::size_t>(b)] = stamp;
      if (match[static_cast<std::size_t>(b)] < 0 ||
          self(self, match[static_cast<std::size_t>(b)])) {
        match[static_cast<std::size_t>(b)] = a;
        match[static_cast<std::size_t>(a)] = b;
        return true;
      }
    }
    return false;
  };

  for (int a = 0; a < n; ++a) {
    if (color[static_cast<std::size_t>(a)] != 0) continue;
    if (match[static_cast<std::size_t>(a)] >= 0) continue;
    ++stamp;
    augment(augment, a);
  }
  return match;
}

// Perfect matching on an arbitrary (small) graph by branching on the lowest
// unmatched vertex, with memoized failures on the matched-vertex mask.
bool general_pm(const Graph& g, std::uint64_t matched,
                std::vector<std::pair<int, int>>& out,
                std::unordered_set<std::uint64_t>& failed) {
  int n = g.order();
  int v = -1;
  for (int i = 0; i < n; ++i)
    if (!((matched >> i) & 1)) {
      v = i;
      break;
    }
  if (v < 0) return true;
  if (failed.contains(matched)) return false;
  for (int u : g.neighbors(v)) {
    if ((matched >> u) & 1) continue;
    out.emplace_back(v, u);
    if (general_pm(g, matched | (1ull << v) | (1ull << u), out, failed))
      return true;
    out.pop_back();
  }
  failed.insert(matched);
  return false;
}

std::vector<int> side_vertices(const std::vector<int>& color, int which) {
  std::vector<int> out;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (color[v] == which) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  int count = 0;
  component_ids(g, &count);
  return count == 1;
}

bool is_forest(const Graph& g) {
  int count = 0;
  component_ids(g, &count);
  return g.edge_count() == g.order() - count;
}

Bipartition bipartition(const Graph& t) {
  if (t.order() == 0) throw DomainError("bipartition of the empty graph");
  if (!is_connected(t)) throw DomainError("graph is not connected");
  auto color = two_color(t);
  if (!color) throw DomainError("graph has an odd cycle (not bipartite)");
  return Bipartition{side_vertices(*color, 0), side_vertices(*color, 1)};
}

bool is_equibipartite(const Graph& f) {
  if (!is_forest(f)) throw DomainError("graph has a cycle (not a forest)");
  auto color = two_color(f);
  int count = 0;
  auto comp = component_ids(f, &count);
  std::vector<int> balance(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < f.order(); ++v)
    balance[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] +=
        (*color)[static_cast<std::size_t>(v)] == 0 ? 1 : -1;
  return std::all_of(balance.begin(), balance.end(),
                     [](int b) { return b == 0; });
}

bool has_perfect_matching(const Graph& f,
                          std::vector<std::pair<int, int>>* matching) {
  int n = f.order();
  if (n % 2 != 0) return false;
  if (n == 0) {
    if (matching) matching->clear();
    return true;
  }
  auto color = two_color(f);
  if (color) {
    auto match = max_bipartite_matching(f, *color);
    bool perfect = std::all_of(match.begin(), match.end(),
                               [](int m) { return m >= 0; });
    if (perfect && matching) {
      matching->clear();
      for (int v = 0; v < n; ++v)
        if (v < match[static_cast<std::size_t>(v)])
          matching->emplace_back(v, match[static_cast<std::size_t>(v)]);
    }
    return perfect;
  }
  if (n > 63)
    throw DomainError(
        "perfect matching on non-bipartite graphs supported only for n <= 63");
  std::vector<std::pair<int, int>> out;
  std::unordered_set<std::uint64_t> failed;
  bool ok = general_pm(f, 0, out, failed);
  if (ok && matching) *matching = out;
  return ok;
}

std::vector<int> hall_violator(const Graph& t, Side side) {
  Bipartition bp = bipartition(t);
  auto color = two_color(t);
  int want = side == Side::a ? 0 : 1;
  auto match = max_bipartite_matching(t, *color);

  std::vector<int> best;
  for (int a0 : (side == Side::a ? bp.side_a : bp.side_b)) {
    if (match[static_cast<std::size_t>(a0)] >= 0) continue;
    // Alternating reachability: side -> other via any edge, back via
    // matched edges. The reached side-vertices violate Hall with
    // |N(S)| = |S| - 1, and such an S is inclusion-minimal.
    std::vector<bool> in_s(static_cast<std::size_t>(t.order()), false);
    std::vector<bool> in_n(static_cast<std::size_t>(t.order()), false);
    std::queue<int> q;
    q.push(a0);
    in_s[static_cast<std::size_t>(a0)] = true;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      t.for_each_neighbor(a, [&](int b) {
        if (in_n[static_cast<std::size_t>(b)]) return;
        in_n[static_cast<std::size_t>(b)] = true;
        int back = match[static_cast<std::size_t>(b)];
        if (back >= 0 && !in_s[static_cast<std::size_t>(back)]) {
          in_s[static_cast<std::size_t>(back)] = true;
          q.push(back);
        }
      });
    }
    std::vector<int> s;
    for (int v = 0; v < t.order(); ++v)
      if (in_s[static_cast<std::size_t>(v)] &&
          (*color)[static_cast<std::size_t>(v)] == want)
        s.push_back(v);
    if (best.empty() || s.size() < best.size() ||
        (s.size() == best.size() && s < best))
      best = std::move(s);
  }
  if (best.empty())
    throw DomainError(side == Side::a
                          ? "no Hall violator on side A (side is saturated)"
                          : "no Hall violator on side B (side is saturated)");
  return best;
}

PartitionCert nopm_partition(const Graph& t) {
  int n = t.order();
  if (n == 0 || n % 2 != 0)
    throw DomainError("tree must have an even number of vertices");
  if (!is_forest(t) || !is_connected(t))
    throw DomainError("graph is not a tree");
  if (!is_equibipartite(t)) throw DomainError("tree is not equibipartite");
  if (has_perfect_matching(t))
    throw DomainError("tree has a perfect matching (no certificate exists)");
  long long l = n / 2;

  auto color = two_color(t);
  std::vector<int> s = hall_violator(t, Side::a);

  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (int v : s) removed[static_cast<std::size_t>(v)] = true;
  std::vector<bool> in_ns(static_cast<std::size_t>(n), false);
  for (int v : s)
    t.for_each_neighbor(v, [&](int u) {
      in_ns[static_cast<std::size_t>(u)] = true;
      removed[static_cast<std::size_t>(u)] = true;
    });

  // Components of t - (S u N(S)), discovered in ascending-root order, so the
  // first qualifying one is the lexicographically least.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int root = 0; root < n; ++root) {
    if (removed[static_cast<std::size_t>(root)] ||
        comp[static_cast<std::size_t>(root)] >= 0)
      continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<int> q;
    q.push(root);
    comp[static_cast<std::size_t>(root)] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      members[static_cast<std::size_t>(id)].push_back(v);
      t.for_each_neighbor(v, [&](int u) {
        if (!removed[static_cast<std::size_t>(u)] &&
            comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = id;
          q.push(u);
        }
      });
    }
  }

  const std::vector<int>* chosen = nullptr;
  for (const auto& c : members) {
    int a_cnt = 0, b_cnt = 0;
    for (int v : c)
      ((*color)[static_cast<std::size_t>(v)] == 0 ? a_cnt : b_cnt)++;
    if (b_cnt > a_cnt) {
      chosen = &c;
      break;
    }
  }
  if (!chosen)
    throw Error(
        "certificate construction invariant violated: no component with "
        "more B- than A-vertices");

  std::vector<bool> in_c(static_cast<std::size_t>(n), false);
  for (int v : *chosen) in_c[static_cast<std::size_t>(v)] = true;
  int x = -1, y = -1, edge_count = 0;
  for (int v : *chosen)
    t.for_each_neighbor(v, [&](int u) {
      if (in_ns[static_cast<std::size_t>(u)]) {
        ++edge_count;
        x = v;
        y = u;
      }
    });
  if (edge_count != 1)
    throw Error(
        "certificate construction invariant violated: component joined to "
        "N(S) by " +
        std::to_string(edge_count) + " edges, expected exactly 1");

  int x_side = (*color)[static_cast<std::size_t>(x)];
  int y_side = (*color)[static_cast<std::size_t>(y)];
  PartitionCert cert;
  cert.small_edge = {std::min(x, y), std::max(x, y)};
  for (int v = 0; v < n; ++v) {
    bool small = in_c[static_cast<std::size_t>(v)]
                     ? (*color)[static_cast<std::size_t>(v)] == x_side
                     : (*color)[static_cast<std::size_t>(v)] == y_side;
    (small ? cert.small_class : cert.large_class).push_back(v);
  }

  // Validate every certificate invariant before handing it out.
  auto induced_edges = [&](const std::vector<int>& cls) {
    long long e = 0;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int v : cls) in[static_cast<std::size_t>(v)] = true;
    for (int v : cls)
      t.for_each_neighbor(v, [&](int u) {
        if (in[static_cast<std::size_t>(u)] && v < u) ++e;
      });
    return e;
  };
  if (cert.small_class.size() >= cert.large_class.size() ||
      static_cast<long long>(cert.small_class.size()) >= l ||
      induced_edges(cert.small_class) != 1 ||
      induced_edges(cert.large_class) != 0)
    throw Error("certificate construction invariant violated: bad partition");
  return cert;
}

bool check_all_unequal_partitions(const Graph& t,
                                  std::vector<int>* violating_class,
                                  int partition_cap) {
  int n = t.order();
  if (n > 2 * partition_cap)
    throw DomainError("graph too large for exhaustive partition check");
  if (n == 0) return true;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    t.for_each_neighbor(v, [&](int u) { rows[static_cast<std::size_t>(v)] |= 1ull << u; });
  auto class_has_edge = [&](std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (rows[static_cast<std::size_t>(v)] & mask) return true;
    }
    return false;
  };
  // Partitions are unordered: fix vertex 0 in one class.
  std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  for (std::uint64_t s = 0; s < (1ull << (n - 1)); ++s) {
    std::uint64_t cls = (s << 1) | 1ull;
    int size = std::popcount(cls);
    if (2 * size == n) continue;
    std::uint64_t larger = 2 * size > n ? cls : (full & ~cls);
    if (!class_has_edge(larger)) {
      if (violating_class) {
        violating_class->clear();
        for (std::uint64_t m = larger; m; m &= m - 1)
          violating_class->push_back(std::countr_zero(m));
      }
      return false;
    }
  }
  return true;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > 16) throw DomainError("tree enumeration capped at 16 vertices");
  // Grow by attaching a leaf at every vertex, deduplicating canonically.
  std::vector<Graph> level = {Graph::empty_graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::map<GraphCode, Graph> next;
    for (const Graph& t : level) {
      for (int at = 0; at < t.order(); ++at) {
        auto edges = t.edges();
        edges.emplace_back(at, t.order());
        Graph grown = Graph::from_edges(t.order() + 1, edges);
        next.emplace(canonical_code(grown), grown);
      }
    }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> enumerate_equibipartite_trees(int two_l) {
  if (two_l < 2 || two_l % 2 != 0)
    throw DomainError("vertex count must be even and at least 2");
  if (two_l > 14)
    throw DomainError("equibipartite tree enumeration capped at 14 vertices");
  std::vector<Graph> out;
  for (const Graph& t : enumerate_trees(two_l))
    if (is_equibipartite(t)) out.push_back(t);
  return out;
}

Graph random_equibipartite_tree(int two_l, std::uint64_t seed) {
  if (two_l < 2 || two_l % 2 != 0)
    throw DomainError("vertex count must be even and at least 2");
  std::mt19937_64 rng(seed);
  while (true) {
    Graph t = [&] {
      int n = two_l;
      if (n == 2) return Graph::path(2);
      // Prufer decode of a uniform random sequence.
      std::vector<int> prufer(static_cast<std::size_t>(n - 2));
      std::uniform_int_distribution<int> dist(0, n - 1);
      for (auto& p : prufer) p = dist(rng);
      std::vector<int> deg(static_cast<std::size_t>(n), 1);
      for (int p : prufer) ++deg[static_cast<std::size_t>(p)];
      std::set<int> leaves;
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
      std::vector<std::pair<int, int>> edges;
      for (int p : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
        if (--deg[static_cast<std::size_t>(p)] == 1) leaves.insert(p);
      }
      int u = *leaves.begin();
      int v = *std::next(leaves.begin());
      edges.emplace_back(std::min(u, v), std::max(u, v));
      return Graph::from_edges(n, edges);
    }();
    if (is_equibipartite(t)) return t;
  }
}

ForestInfo validate_forest(const Graph& h) {
  if (!is_forest(h)) throw DomainError("forest hypothesis failed: graph has a cycle");
  if (!is_equibipartite(h))
    throw DomainError(
        "equibipartite hypothesis failed: some component has unequal sides");
  int count = 0;
  component_ids(h, &count);
  if (count < 2)
    throw DomainError(
        "component hypothesis failed: forest must have at least two trees");
  ForestInfo info;
  info.l = h.order() / 2;
  info.component_count = count;
  info.has_perfect_matching = has_perfect_matching(h);
  return info;
}

}  // namespace turan
