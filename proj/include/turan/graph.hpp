// Simple undirected graphs with bitmask adjacency rows, the standard
// constructors (K_t, E_t, M_t, P_l, Turan graphs), disjoint union / join,
// canonical forms, and graph6 / edge-list I/O.
#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A violated operation hypothesis (bad parameter, unmet precondition).
class DomainError : public Error {
public:
  using Error::Error;
};

// Malformed input bytes; `offset` is the first offending byte.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// Process-wide vertex cap. Default 512; settable once at startup
// (the CLI reads TURAN_VERTEX_CAP). Keeps adjacency rows a fixed,
// small number of 64-bit words.
int graph_vertex_cap();
void set_graph_vertex_cap(int cap);

// Immutable simple graph on vertices 0..n-1. Adjacency is stored as one
// bitmask row per vertex (words_per_row() 64-bit words each); rows stay
// symmetric and loop-free by construction.
class Graph {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Graph() = default;

  static Graph empty_graph(int t);
  static Graph complete(int t);
  // Maximal matching on t vertices: floor(t/2) edges (0,1),(2,3),...
  static Graph matching(int t);
  // Path on l vertices (l >= 1), edges (i,i+1).
  static Graph path(int l);
  // Complete r-partite graph on n vertices, class sizes as equal as possible.
  static Graph turan_graph(int r, int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long edge_count() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >>
            (v % kWordBits)) & 1u;
  }

  std::span<const Word> row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(int v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }

  std::vector<int> neighbors(int v) const;

  // Edges as (u,v) with u < v, ascending lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  // New graph with vertex i renamed perm[i]; perm must be a permutation.
  Graph relabeled(const std::vector<int>& perm) const;

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    auto r = row(v);
    for (int wi = 0; wi < words_; ++wi) {
      Word w = r[wi];
      while (w) {
        f(wi * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const Graph&) const = default;

private:
  friend class GraphBuilder;
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
  }

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<Word> bits_;  // n_ * words_ words, row-major
};

// Mutable staging area; everything else hands out immutable Graphs.
class GraphBuilder {
public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int order() const { return g_.n_; }
  Graph build() &&;

private:
  Graph g_;
};

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Subgraph induced by s; vertices of s are relabeled 0..|s|-1 in ascending
// original order. s must contain distinct in-range vertices.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Canonical byte string, equal for two graphs iff they are isomorphic.
// The bytes are the graph6 encoding of the canonically relabeled graph,
// so a GraphCode is also directly decodable.
struct GraphCode {
  std::string bytes;
  auto operator<=>(const GraphCode&) const = default;
};

GraphCode canonical_code(const Graph& g);

// Canonical code restricted to labelings that place vertex v last, over the
// same refinement tree as canonical_code. Equal to canonical_code(g) iff v
// lies in the orbit of the canonically-last vertex; this is the parent test
// of the isomorph-free search. Returns an empty code when the refinement
// never lets v sit last (v is then certainly outside that orbit).
GraphCode canonical_code_forcing_last(const Graph& g, int v);

enum class GraphFormat { graph6, edgelist };

std::string encode(const Graph& g, GraphFormat format);
Graph decode(std::string_view bytes, GraphFormat format);

}  // namespace turan

#endif  // TURAN_GRAPH_HPP
