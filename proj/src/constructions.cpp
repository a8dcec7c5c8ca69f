#include "turan/constructions.hpp"

#include "turan/treelab.hpp"

namespace turan {

Graph p3_extremal(long long n, long long k) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (n < k) throw DomainError("n must be at least k");
  return join(Graph::complete(static_cast<int>(k - 1)),
              Graph::matching(static_cast<int>(n - k + 1)));
}

Graph pl_extremal(long long n, long long k, long long l) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (l < 4) throw DomainError("l must be at least 4");
  long long t = k * (l / 2) - 1;
  if (n < t + 2)
    throw DomainError("n must be at least k*floor(l/2) + 1");
  GraphBuilder b(static_cast<int>(n));
  for (long long u = 0; u < t; ++u) {
    for (long long v = u + 1; v < n; ++v)
      b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (l % 2 == 1)
    b.add_edge(static_cast<int>(t), static_cast<int>(t + 1));
  return std::move(b).build();
}

Graph erdos_gallai_extremal(long long n, long long l) {
  if (l < 2) throw DomainError("l must be at least 2");
  if (n < 0) throw DomainError("n must be nonnegative");
  GraphBuilder b(static_cast<int>(n));
  long long block = l - 1;
  for (long long start = 0; start < n; start += block) {
    long long end = std::min(n, start + block);
    for (long long u = start; u < end; ++u)
      for (long long v = u + 1; v < end; ++v)
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return std::move(b).build();
}

Graph forest_extremal(long long n, const Graph& h) {
  ForestInfo info = validate_forest(h);
  long long l = info.l;
  if (n < l) throw DomainError("n must be at least l = |V(H)|/2");
  Graph top = info.has_perfect_matching
                  ? Graph::complete(static_cast<int>(l - 1))
                  : Graph::empty_graph(static_cast<int>(l - 1));
  return join(top, Graph::empty_graph(static_cast<int>(n - l + 1)));
}

Graph gorgol_construction(long long n, long long k, const Graph& g_extremal,
                          long long v, GorgolKind which) {
  if (k < 1 || v < 1) throw DomainError("k and v must be at least 1");
  if (which == GorgolKind::union_construction) {
    if (n < k * v) throw DomainError("n must be at least k*v");
    if (g_extremal.order() != n - k * v + 1)
      throw DomainError("union construction needs a graph on n-kv+1 vertices");
    return disjoint_union(g_extremal,
                          Graph::complete(static_cast<int>(k * v - 1)));
  }
  if (g_extremal.order() != n - k + 1)
    throw DomainError("join construction needs a graph on n-k+1 vertices");
  return join(g_extremal, Graph::complete(static_cast<int>(k - 1)));
}

}  // namespace turan
