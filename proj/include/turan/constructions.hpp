// Builders for the extremal and lower-bound graph families: the clique-plus-
// matching graph for k.P_3, the clique-joined-to-independent-set graphs for
// k.P_l and equibipartite forests, disjoint cliques for single paths, and
// the two generic compositions for forbidding k disjoint copies.
#ifndef TURAN_CONSTRUCTIONS_HPP
#define TURAN_CONSTRUCTIONS_HPP

#include "turan/graph.hpp"

namespace turan {

// K_{k-1} + M_{n-k+1}: the unique extremal graph for k disjoint P_3 at
// large n. Edge count equals ex_k_p3(n, k) whenever n >= 3k.
Graph p3_extremal(long long n, long long k);

// K_t + E_{n-t}, t = k*floor(l/2) - 1, plus one edge inside the empty class
// when l is odd. Edge count equals ex_k_pl(n, k, l). Requires k >= 2,
// l >= 4, n >= k*floor(l/2) + 1.
Graph pl_extremal(long long n, long long k, long long l);

// floor(n/(l-1)) disjoint K_{l-1} plus one K_{n mod (l-1)}; P_l-free, and
// attains the Erdos-Gallai bound exactly when (l-1) | n. Off divisibility
// this is a lower-bound construction.
Graph erdos_gallai_extremal(long long n, long long l);

// K_{l-1} + E_{n-l+1} when h has a perfect matching, E_{l-1} + E_{n-l+1}
// otherwise; h must be an equibipartite forest with >= 2 tree components
// on 2l vertices.
Graph forest_extremal(long long n, const Graph& h);

enum class GorgolKind { union_construction, join_construction };

// The two generic compositions avoiding k disjoint copies of a connected
// graph G on v vertices, given a single-copy extremal graph:
//   union: g_extremal (on n-kv+1 vertices) u K_{kv-1}
//   join:  g_extremal (on n-k+1 vertices)  + K_{k-1}
Graph gorgol_construction(long long n, long long k, const Graph& g_extremal,
                          long long v, GorgolKind which);

}  // namespace turan

#endif  // TURAN_CONSTRUCTIONS_HPP
