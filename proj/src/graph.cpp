#include "turan/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>

namespace turan {

namespace {

std::atomic<int> g_vertex_cap{512};

int words_for(int n) { return (n + Graph::kWordBits - 1) / Graph::kWordBits; }

}  // namespace

int graph_vertex_cap() { return g_vertex_cap.load(std::memory_order_relaxed); }

void set_graph_vertex_cap(int cap) {
  if (cap < 0) throw DomainError("vertex cap must be nonnegative");
  g_vertex_cap.store(cap, std::memory_order_relaxed);
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  if (n > graph_vertex_cap())
    throw DomainError("vertex count " + std::to_string(n) +
                      " exceeds cap " + std::to_string(graph_vertex_cap()));
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw DomainError("self-loops are not allowed");
  std::size_t iu = static_cast<std::size_t>(u) * g_.words_ + v / Graph::kWordBits;
  Graph::Word bit = Graph::Word{1} << (v % Graph::kWordBits);
  if (g_.bits_[iu] & bit) return;  // already present
  g_.bits_[iu] |= bit;
  g_.bits_[static_cast<std::size_t>(v) * g_.words_ + u / Graph::kWordBits] |=
      Graph::Word{1} << (u % Graph::kWordBits);
  ++g_.m_;
}

bool GraphBuilder::has_edge(int u, int v) const { return g_.has_edge(u, v); }

Graph GraphBuilder::build() && { return std::move(g_); }

Graph Graph::empty_graph(int t) { return GraphBuilder(t).build(); }

Graph Graph::complete(int t) {
  GraphBuilder b(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::matching(int t) {
  GraphBuilder b(t);
  for (int u = 0; u + 1 < t; u += 2) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph Graph::path(int l) {
  if (l < 1) throw DomainError("a path needs at least one vertex");
  GraphBuilder b(l);
  for (int u = 0; u + 1 < l; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph Graph::turan_graph(int r, int n) {
  if (r < 1) throw DomainError("Turan graph needs at least one class");
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  // First (n mod r) classes get one extra vertex; classes are contiguous.
  std::vector<int> cls(static_cast<std::size_t>(n));
  int idx = 0;
  for (int c = 0; c < r; ++c) {
    int size = n / r + (c < n % r ? 1 : 0);
    for (int i = 0; i < size; ++i) cls[idx++] = c;
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] != cls[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for_each_neighbor(v, [&](int u) { out.push_back(u); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw DomainError("permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
      throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(perm[static_cast<std::size_t>(u)],
                                         perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  int off = g.order();
  for (auto [u, v] : h.edges()) b.add_edge(u + off, v + off);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  int off = g.order();
  for (auto [u, v] : h.edges()) b.add_edge(u + off, v + off);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, v + off);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw DomainError("vertex set contains duplicates");
  for (int v : verts)
    if (v < 0 || v >= g.order())
      throw DomainError("vertex set not contained in the graph");
  GraphBuilder b(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Canonical form: equitable (degree) refinement + backtracking over cell
// orderings, taking the lexicographically least adjacency encoding.
// Automorphisms discovered at leaf ties prune equivalent branches.
// ---------------------------------------------------------------------------

namespace {

using Cells = std::vector<std::vector<int>>;

struct CanonSearch {
  const Graph& g;
  int n;
  int forced_last;  // -1 if unconstrained

  std::vector<std::uint8_t> best_code;
  bool have_best = false;
  std::vector<int> best_labeling;              // vertex -> position
  std::vector<std::vector<int>> automorphisms;  // discovered generators

  explicit CanonSearch(const Graph& graph, int forced)
      : g(graph), n(graph.order()), forced_last(forced) {}

  // Column-major upper-triangle bits of the relabeled adjacency matrix,
  // matching the graph6 bit order so codes can reuse the encoder.
  std::vector<std::uint8_t> code_of(const std::vector<int>& pos) const {
    std::vector<int> vert(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vert[static_cast<std::size_t>(pos[v])] = v;
    std::vector<std::uint8_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        if (g.has_edge(vert[static_cast<std::size_t>(i)], vert[static_cast<std::size_t>(j)]))
          code[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
        ++bit;
      }
    return code;
  }

  // Split every cell by neighbor counts into each splitter cell until no
  // cell splits. Subcells are ordered by count ascending; the ordering only
  // depends on isomorphism invariants, so the search tree is
  // label-independent.
  void refine(Cells& cells) const {
    std::vector<int> cnt(static_cast<std::size_t>(n));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        for (int v = 0; v < n; ++v) cnt[static_cast<std::size_t>(v)] = 0;
        for (int s : cells[si])
          g.for_each_neighbor(s, [&](int u) { ++cnt[static_cast<std::size_t>(u)]; });
        Cells next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
          bool uniform = true;
          for (std::size_t k = 1; k < cell.size(); ++k)
            if (cnt[static_cast<std::size_t>(cell[k])] !=
                cnt[static_cast<std::size_t>(cell[0])]) {
              uniform = false;
              break;
            }
          if (uniform) {
            next.push_back(std::move(cell));
            continue;
          }
          changed = true;
          std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
            return cnt[static_cast<std::size_t>(a)] < cnt[static_cast<std::size_t>(b)];
          });
          std::size_t start = 0;
          for (std::size_t k = 1; k <= cell.size(); ++k) {
            if (k == cell.size() || cnt[static_cast<std::size_t>(cell[k])] !=
                                        cnt[static_cast<std::size_t>(cell[start])]) {
              next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                cell.begin() + static_cast<std::ptrdiff_t>(k));
              start = k;
            }
          }
        }
        cells = std::move(next);
      }
    }
  }

  // The forced-last vertex must stay in the final cell at every node.
  bool forced_ok(const Cells& cells) const {
    if (forced_last < 0) return true;
    return std::find(cells.back().begin(), cells.back().end(), forced_last) !=
           cells.back().end();
  }

  void descend(Cells cells, std::vector<int>& fixed) {
    refine(cells);
    if (!forced_ok(cells)) return;
    bool discrete = true;
    std::size_t target = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
      if (cells[ci].size() > 1) {
        discrete = false;
        target = ci;
        break;
      }
    if (discrete) {
      std::vector<int> pos(static_cast<std::size_t>(n));
      for (std::size_t ci = 0; ci < cells.size(); ++ci)
        pos[static_cast<std::size_t>(cells[ci][0])] = static_cast<int>(ci);
      auto code = code_of(pos);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_labeling = pos;
        have_best = true;
      } else if (code == best_code) {
        // pos and best_labeling induce an automorphism.
        std::vector<int> vert_best(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
          vert_best[static_cast<std::size_t>(best_labeling[v])] = v;
        std::vector<int> aut(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
          aut[static_cast<std::size_t>(v)] = vert_best[static_cast<std::size_t>(pos[v])];
        if (automorphisms.size() < 512) automorphisms.push_back(std::move(aut));
      }
      return;
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
      bool skip = false;
      for (const auto& aut : automorphisms) {
        bool fixes = true;
        for (int f : fixed)
          if (aut[static_cast<std::size_t>(f)] != f) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        if (forced_last >= 0 &&
            aut[static_cast<std::size_t>(forced_last)] != forced_last)
          continue;
        int image = aut[static_cast<std::size_t>(v)];
        if (std::find(tried.begin(), tried.end(), image) != tried.end()) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);
      Cells child = cells;
      std::vector<int> rest;
      for (int u : cells[target])
        if (u != v) rest.push_back(u);
      child[target] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                   std::move(rest));
      fixed.push_back(v);
      descend(std::move(child), fixed);
      fixed.pop_back();
    }
  }

  // The forced-last variant explores the same refinement tree as the
  // unconstrained search (same initial unit partition), pruning branches
  // where the forced vertex leaves the final cell. Its minimum is then the
  // minimum over exactly the unconstrained leaves that place the vertex
  // last, which makes the two codes comparable.
  std::vector<std::uint8_t> run() {
    if (n == 0) return {};
    Cells cells;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    cells.push_back(std::move(all));
    std::vector<int> fixed;
    descend(std::move(cells), fixed);
    return best_code;
  }
};

std::string graph6_header(int n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  } else {
    throw DomainError("graph too large for graph6 encoding");
  }
  return out;
}

// Packs column-major upper-triangle bits (MSB-first per byte) into graph6.
std::string graph6_from_bits(int n, const std::vector<std::uint8_t>& bits) {
  std::string out = graph6_header(n);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (std::size_t start = 0; start < nbits; start += 6) {
    int group = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      std::size_t bit = start + k;
      int b = 0;
      if (bit < nbits) b = (bits[bit / 8] >> (7 - bit % 8)) & 1;
      group = (group << 1) | b;
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::vector<std::uint8_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) bits[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      ++bit;
    }
  return graph6_from_bits(n, bits);
}

Graph decode_graph6(std::string_view s) {
  if (s.empty()) throw ParseError("empty graph6 input", 0);
  std::size_t pos = 0;
  auto need = [&](std::size_t at) -> int {
    if (at >= s.size()) throw ParseError("truncated graph6 input", at);
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", at);
    return c - 63;
  };
  long long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw ParseError("graph6 order above supported range", 1);
    n = (static_cast<long long>(need(1)) << 12) |
        (static_cast<long long>(need(2)) << 6) | need(3);
    pos = 4;
  } else {
    n = need(0);
    pos = 1;
  }
  if (n > graph_vertex_cap())
    throw ParseError("graph6 order exceeds vertex cap", 0);
  GraphBuilder b(static_cast<int>(n));
  int group = 0;
  int left = 0;
  std::size_t group_at = pos;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        group_at = pos;
        group = need(pos++);
        left = 6;
      }
      if ((group >> (left - 1)) & 1) b.add_edge(i, j);
      --left;
    }
  if (left > 0 && (group & ((1 << left) - 1)) != 0)
    throw ParseError("nonzero graph6 padding bits", group_at);
  if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", pos);
  return std::move(b).build();
}

std::string encode_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph decode_edgelist(std::string_view s) {
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  auto read_int = [&]() -> long long {
    skip_spaces();
    std::size_t at = pos;
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
      throw ParseError("expected a nonnegative integer", at);
    long long x = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      x = x * 10 + (s[pos] - '0');
      if (x > (1ll << 40)) throw ParseError("integer out of range", at);
      ++pos;
    }
    return x;
  };
  auto read_newline = [&] {
    skip_spaces();
    if (pos >= s.size() || s[pos] != '\n')
      throw ParseError("expected end of line", pos);
    ++pos;
  };
  long long n = read_int();
  long long m = read_int();
  read_newline();
  if (n > graph_vertex_cap()) throw ParseError("order exceeds vertex cap", 0);
  GraphBuilder b(static_cast<int>(n));
  std::pair<long long, long long> prev{-1, -1};
  for (long long e = 0; e < m; ++e) {
    std::size_t line_at = pos;
    long long u = read_int();
    long long v = read_int();
    read_newline();
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v", line_at);
    if (v >= n) throw ParseError("edge endpoint out of range", line_at);
    if (std::pair{u, v} <= prev)
      throw ParseError("edges must be in ascending lexicographic order", line_at);
    prev = {u, v};
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (pos != s.size()) throw ParseError("trailing bytes after edge list", pos);
  return std::move(b).build();
}

}  // namespace

GraphCode canonical_code(const Graph& g) {
  CanonSearch search(g, -1);
  auto bits = search.run();
  return GraphCode{graph6_from_bits(g.order(), bits)};
}

GraphCode canonical_code_forcing_last(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex index out of range");
  CanonSearch search(g, v);
  auto bits = search.run();
  if (!search.have_best && g.order() > 0) return GraphCode{};
  return GraphCode{graph6_from_bits(g.order(), bits)};
}

std::string encode(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return encode_graph6(g);
    case GraphFormat::edgelist: return encode_edgelist(g);
  }
  throw DomainError("unknown graph format");
}

Graph decode(std::string_view bytes, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return decode_graph6(bytes);
    case GraphFormat::edgelist: return decode_edgelist(bytes);
  }
  throw DomainError("unknown graph format");
}

}  // namespace turan
