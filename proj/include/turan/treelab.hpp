// Equibipartite tree and forest machinery: bipartitions, perfect matchings,
// Hall violators, and the constructive two-class partition certificates for
// trees without a perfect matching.
#ifndef TURAN_TREELAB_HPP
#define TURAN_TREELAB_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Bipartition {
  std::vector<int> side_a;  // contains vertex 0
  std::vector<int> side_b;
};

enum class Side { a, b };

// Two-class partition of an equibipartite no-perfect-matching tree:
// the larger class induces no edges, the smaller induces exactly one.
struct PartitionCert {
  std::vector<int> small_class;
  std::vector<int> large_class;
  std::pair<int, int> small_edge;
};

struct ForestInfo {
  long long l = 0;  // |V| / 2
  int component_count = 0;
  bool has_perfect_matching = false;
};

// 2-coloring by BFS layering from vertex 0; side_a contains vertex 0.
// Requires a connected bipartite graph.
Bipartition bipartition(const Graph& t);

// True iff every tree component of the forest f has equally sized sides.
bool is_equibipartite(const Graph& f);

bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

// Perfect matching decision; fills `matching` (pairs covering V) when
// present. Bipartite graphs use augmenting paths; small non-bipartite
// inputs fall back to recursive search.
bool has_perfect_matching(const Graph& f,
                          std::vector<std::pair<int, int>>* matching = nullptr);

// Inclusion-minimal S on the chosen side of a connected bipartite graph with
// |N(S)| < |S|, found by alternating reachability from unsaturated vertices
// after a maximum matching. Ties: smallest |S|, then lexicographic.
// Throws DomainError if that side has no violator.
std::vector<int> hall_violator(const Graph& t, Side side);

// The constructive partition for an equibipartite tree on 2l vertices with
// no perfect matching: minimal violator S, the component C of t - (S u N(S))
// with more B- than A-vertices (lexicographically least such), the unique
// edge xy from C to N(S); small_class is x's side within C plus y's side
// outside C.
PartitionCert nopm_partition(const Graph& t);

// True iff every partition of V into two unequal classes has an edge inside
// the larger class. Exhaustive over 2^(n-1) partitions; n <= 2*cap.
bool check_all_unequal_partitions(const Graph& t,
                                  std::vector<int>* violating_class = nullptr,
                                  int partition_cap = 11);

// All trees on n vertices, one representative per isomorphism class,
// sorted by canonical code. n <= 16.
std::vector<Graph> enumerate_trees(int n);

// All equibipartite trees on two_l vertices up to isomorphism. two_l <= 14.
std::vector<Graph> enumerate_equibipartite_trees(int two_l);

// Uniform labeled tree (Prufer sampling), rejection-sampled until
// equibipartite. Deterministic in seed.
Graph random_equibipartite_tree(int two_l, std::uint64_t seed);

// Validates the equibipartite-forest hypotheses (acyclic, every component
// equibipartite, at least two components); throws a distinct DomainError per
// failed hypothesis.
ForestInfo validate_forest(const Graph& h);

}  // namespace turan

#endif  // TURAN_TREELAB_HPP
