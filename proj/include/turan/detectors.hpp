// Exact containment decisions for the forbidden configurations: disjoint
// path packings, single paths (longest-path search), forest embeddings,
// plus the codegree machinery (common neighborhoods, high-codegree subsets,
// and the flattened codegree hypergraph).
#ifndef TURAN_DETECTORS_HPP
#define TURAN_DETECTORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// A forbidden configuration: k disjoint copies of P_l, a single P_l, or an
// explicit forest graph.
class PatternSpec {
public:
  enum class Kind { k_disjoint_paths, single_path, forest };

  static PatternSpec disjoint_paths(int k, int l);
  static PatternSpec single_path(int l);
  static PatternSpec forest_pattern(Graph f);

  // Parses "P6" or "2*P3".
  static PatternSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  int path_count() const { return k_; }
  int path_length() const { return l_; }
  const Graph& forest() const { return forest_; }
  int vertex_count() const;
  std::string to_string() const;

private:
  PatternSpec() = default;
  Kind kind_ = Kind::single_path;
  int k_ = 1;
  int l_ = 2;
  Graph forest_;
};

// Vertex lists realizing an embedding, one list per pattern component.
// Path components are listed in path order; forest components list images
// aligned with pattern_components() (ascending pattern vertices).
struct Witness {
  std::vector<std::vector<int>> components;

  std::vector<int> all_vertices() const;
};

struct DetectorOptions {
  // Infeasibility memo budget; past it the search keeps running but stops
  // inserting new entries.
  std::size_t memo_budget_bytes = 64ull << 20;
  // Cap on enumerated P_l copies in build_codegree_hypergraph.
  long long path_copy_cap = 100000;
};

// Pattern component vertex lists (pattern-side), in the deterministic order
// witnesses use: path patterns component by component; forest components by
// (size descending, canonical code), vertices ascending.
std::vector<std::vector<int>> pattern_components(const PatternSpec& p);

// Exact number of vertices on a longest path.
int longest_path(const Graph& g, Witness* witness = nullptr,
                 const DetectorOptions& options = {});

// True iff g contains p as a subgraph (not necessarily induced).
bool contains_pattern(const Graph& g, const PatternSpec& p,
                      Witness* witness = nullptr,
                      const DetectorOptions& options = {});

// Re-checks a witness: disjoint lists, every required edge present.
bool witness_embeds(const Graph& g, const PatternSpec& p, const Witness& w);

// Intersection of the neighborhoods of all vertices in u, excluding u
// itself. u must be nonempty.
std::vector<int> common_neighborhood(const Graph& g, const std::vector<int>& u);

// The t-subset of the copy's vertices maximizing the common-neighborhood
// size; ties broken lexicographically. Returns (subset, codegree).
std::pair<std::vector<int>, int> find_high_codegree_subset(const Graph& g,
                                                           const Witness& copy,
                                                           int t);

// For each enumerated P_l copy (up to options.path_copy_cap), the best
// floor(l/2)-subset with codegree >= threshold becomes a hyperedge.
// Hyperedges are deduplicated and sorted.
std::vector<std::vector<int>> build_codegree_hypergraph(
    const Graph& g, int l, int threshold, const DetectorOptions& options = {});

// Union of cliques on the hyperedges, on n vertices.
Graph flatten_hypergraph(int n, const std::vector<std::vector<int>>& hyperedges);

// True iff every pair of hyperedges shares a vertex.
bool is_intersecting(const std::vector<std::vector<int>>& hyperedges);

// True iff g minus the cover contains no copy of any single component of p.
// With |cover| < k this certifies k-copy freeness.
bool is_pattern_free_certificate(const Graph& g, const PatternSpec& p,
                                 const std::vector<int>& cover,
                                 const DetectorOptions& options = {});

}  // namespace turan

#endif  // TURAN_DETECTORS_HPP
