#include "support/naive.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace turan::naive {

namespace {

std::string triangle_bits(const Graph& g, const std::vector<int>& pos) {
  int n = g.order();
  std::vector<int> vert(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vert[static_cast<std::size_t>(pos[v])] = v;
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits.push_back(g.has_edge(vert[static_cast<std::size_t>(i)],
                                vert[static_cast<std::size_t>(j)])
                         ? '1'
                         : '0');
  return bits;
}

Graph pattern_graph(const PatternSpec& p) {
  if (p.kind() == PatternSpec::Kind::forest) return p.forest();
  Graph paths = Graph::empty_graph(0);
  int k = p.kind() == PatternSpec::Kind::single_path ? 1 : p.path_count();
  for (int c = 0; c < k; ++c)
    paths = disjoint_union(paths, Graph::path(p.path_length()));
  return paths;
}

}  // namespace

std::string min_code(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code = triangle_bits(g, perm);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) !=
            h.has_edge(perm[static_cast<std::size_t>(u)],
                       perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool contains(const Graph& g, const PatternSpec& p) {
  Graph pat = pattern_graph(p);
  int q = pat.order();
  if (q > g.order()) return false;
  std::vector<int> image(static_cast<std::size_t>(q), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == q) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pat.has_edge(j, i) &&
            !g.has_edge(image[static_cast<std::size_t>(j)], v))
          ok = false;
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return dfs(dfs, 0);
}

NaiveExResult exact_ex(int n, const PatternSpec& p) {
  if (n > 7) throw DomainError("naive exact_ex supports n <= 7");
  NaiveExResult result;
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    GraphBuilder b(n);
    for (int i = 0; i < pairs; ++i)
      if ((mask >> i) & 1) b.add_edge(slots[static_cast<std::size_t>(i)].first,
                                      slots[static_cast<std::size_t>(i)].second);
    Graph g = std::move(b).build();
    if (g.edge_count() < result.max_edges) continue;
    if (contains(g, p)) continue;
    if (g.edge_count() > result.max_edges) {
      result.max_edges = g.edge_count();
      result.witness_codes.clear();
    }
    result.witness_codes.insert(canonical_code(g).bytes);
  }
  return result;
}

int longest_path(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1;
  do {
    int len = 1;
    while (len < n && g.has_edge(perm[static_cast<std::size_t>(len - 1)],
                                 perm[static_cast<std::size_t>(len)]))
      ++len;
    best = std::max(best, len);
  } while (best < n && std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool forest_perfect_matching(const Graph& f) {
  int n = f.order();
  if (n % 2 != 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = f.neighbors(v);
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  int remaining = n;
  // Each leaf must be matched to its unique neighbor.
  while (remaining > 0) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] <= 1) {
        leaf = v;
        break;
      }
    if (leaf < 0) return false;  // forests always have leaves; cycles never PM here
    if (deg[static_cast<std::size_t>(leaf)] == 0) return false;
    int partner = -1;
    for (int u : adj[static_cast<std::size_t>(leaf)])
      if (!gone[static_cast<std::size_t>(u)]) {
        partner = u;
        break;
      }
    if (partner < 0) return false;
    gone[static_cast<std::size_t>(leaf)] = true;
    gone[static_cast<std::size_t>(partner)] = true;
    remaining -= 2;
    for (int u : adj[static_cast<std::size_t>(partner)])
      if (!gone[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    for (int u : adj[static_cast<std::size_t>(leaf)])
      if (!gone[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
  }
  return true;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Graph> all_labeled_trees(int n) {
  if (n < 1 || n > 8) throw DomainError("all_labeled_trees supports 1 <= n <= 8");
  if (n == 1) return {Graph::empty_graph(1)};
  if (n == 2) return {Graph::path(2)};
  std::vector<Graph> out;
  std::vector<int> prufer(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    // Decode the Prufer sequence.
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int p : prufer) ++deg[static_cast<std::size_t>(p)];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int p : prufer) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
          leaf = v;
          break;
        }
      used[static_cast<std::size_t>(leaf)] = true;
      edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
      --deg[static_cast<std::size_t>(leaf)];
      --deg[static_cast<std::size_t>(p)];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1)
        last.push_back(v);
    edges.emplace_back(std::min(last[0], last[1]), std::max(last[0], last[1]));
    out.push_back(Graph::from_edges(n, edges));
    // Next sequence.
    int i = n - 3;
    while (i >= 0 && prufer[static_cast<std::size_t>(i)] == n - 1) {
      prufer[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++prufer[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace turan::naive
