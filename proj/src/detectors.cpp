#include "turan/detectors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "turan/treelab.hpp"

namespace turan {

namespace {

// ---------------------------------------------------------------------------
// Vertex-set masks. Search cores are templated over the mask type: one word
// covers every graph with n <= 64, wider graphs use the dynamic variant.
// ---------------------------------------------------------------------------

struct Mask64 {
  std::uint64_t w = 0;

  static Mask64 empty(int) { return {}; }
  static Mask64 all(int n) {
    return {n >= 64 ? ~0ull : ((1ull << n) - 1)};
  }
  void set(int i) { w |= 1ull << i; }
  void reset(int i) { w &= ~(1ull << i); }
  bool test(int i) const { return (w >> i) & 1; }
  int count() const { return std::popcount(w); }
  bool none() const { return w == 0; }
  Mask64 operator&(const Mask64& o) const { return {w & o.w}; }
  Mask64 operator|(const Mask64& o) const { return {w | o.w}; }
  void operator&=(const Mask64& o) { w &= o.w; }
  void operator|=(const Mask64& o) { w |= o.w; }
  Mask64 minus(const Mask64& o) const { return {w & ~o.w}; }
  bool intersects(const Mask64& o) const { return (w & o.w) != 0; }
  bool operator==(const Mask64&) const = default;
  auto operator<=>(const Mask64&) const = default;
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = w; m; m &= m - 1) f(std::countr_zero(m));
  }
  std::size_t hash() const {
    std::uint64_t x = w + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
  std::size_t bytes() const { return sizeof(*this); }
};

struct MaskW {
  std::vector<std::uint64_t> w;

  static MaskW empty(int n) {
    MaskW m;
    m.w.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    return m;
  }
  static MaskW all(int n) {
    MaskW m = empty(n);
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }
  void set(int i) { w[static_cast<std::size_t>(i) / 64] |= 1ull << (i % 64); }
  void reset(int i) { w[static_cast<std::size_t>(i) / 64] &= ~(1ull << (i % 64)); }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  MaskW operator&(const MaskW& o) const {
    MaskW r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  MaskW operator|(const MaskW& o) const {
    MaskW r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= o.w[i];
    return r;
  }
  void operator&=(const MaskW& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  void operator|=(const MaskW& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  MaskW minus(const MaskW& o) const {
    MaskW r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  bool intersects(const MaskW& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  bool operator==(const MaskW&) const = default;
  auto operator<=>(const MaskW&) const = default;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w.size(); ++wi)
      for (std::uint64_t m = w[wi]; m; m &= m - 1)
        f(static_cast<int>(wi * 64) + std::countr_zero(m));
  }
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
  std::size_t bytes() const { return sizeof(*this) + w.size() * 8; }
};

template <class M>
struct MaskHash {
  std::size_t operator()(const M& m) const { return m.hash(); }
};

template <class M>
struct SearchCtx {
  int n = 0;
  std::vector<M> rows;
  std::vector<int> twin;  // twin-class id per vertex; swapping two vertices
                          // of a class is a graph automorphism
  M full;

  int avail_degree(int v, const M& avail) const {
    return (rows[static_cast<std::size_t>(v)] & avail).count();
  }
};

template <class M>
SearchCtx<M> make_ctx(const Graph& g) {
  SearchCtx<M> ctx;
  ctx.n = g.order();
  ctx.full = M::all(ctx.n);
  ctx.rows.reserve(static_cast<std::size_t>(ctx.n));
  for (int v = 0; v < ctx.n; ++v) {
    M row = M::empty(ctx.n);
    g.for_each_neighbor(v, [&](int u) { row.set(u); });
    ctx.rows.push_back(std::move(row));
  }
  // Twin classes: vertices with identical rows (false twins, N(u) = N(v))
  // grouped first; leftover singletons grouped by closed neighborhood
  // (true twins, N[u] = N[v]).
  ctx.twin.assign(static_cast<std::size_t>(ctx.n), -1);
  int next_class = 0;
  std::map<M, std::vector<int>> by_row;
  for (int v = 0; v < ctx.n; ++v)
    by_row[ctx.rows[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<int> singles;
  for (auto& [key, verts] : by_row) {
    if (verts.size() >= 2) {
      for (int v : verts) ctx.twin[static_cast<std::size_t>(v)] = next_class;
      ++next_class;
    } else {
      singles.push_back(verts[0]);
    }
  }
  std::map<M, std::vector<int>> by_closed;
  for (int v : singles) {
    M key = ctx.rows[static_cast<std::size_t>(v)];
    key.set(v);
    by_closed[key].push_back(v);
  }
  for (auto& [key, verts] : by_closed) {
    for (int v : verts) ctx.twin[static_cast<std::size_t>(v)] = next_class;
    ++next_class;
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Disjoint-path packing: include/exclude branching on a lowest-degree
// available anchor, exact path enumeration through the anchor, twin-class
// candidate collapsing, and memoized infeasible (available-set, paths-left)
// states.
// ---------------------------------------------------------------------------

template <class M>
struct PackSearcher {
  const SearchCtx<M>& ctx;
  int l;
  std::vector<std::unordered_set<M, MaskHash<M>>> failed;  // by paths left
  std::size_t memo_entries = 0;
  std::size_t memo_entry_limit;
  std::vector<std::vector<int>> placed;  // success paths, deepest first

  PackSearcher(const SearchCtx<M>& ctx, int l, int k,
               const DetectorOptions& opt)
      : ctx(ctx), l(l), failed(static_cast<std::size_t>(k) + 1) {
    std::size_t per_entry = 48 + M::empty(ctx.n).bytes();
    memo_entry_limit = opt.memo_budget_bytes / per_entry;
  }

  bool search(M avail, int left) {
    if (left == 0) return true;
    // Vertices with no available neighbor cannot lie on any path.
    M stripped = avail;
    avail.for_each([&](int v) {
      if (!ctx.rows[static_cast<std::size_t>(v)].intersects(avail))
        stripped.reset(v);
    });
    if (stripped.count() < left * l) return false;
    auto& memo = failed[static_cast<std::size_t>(left)];
    if (memo.contains(stripped)) return false;

    int anchor = -1;
    int best_deg = std::numeric_limits<int>::max();
    stripped.for_each([&](int v) {
      int d = ctx.avail_degree(v, stripped);
      if (d < best_deg) {
        best_deg = d;
        anchor = v;
      }
    });

    if (paths_through(anchor, stripped, left)) return true;

    // The anchor lies on no path of any packing here, so neither does any
    // available twin of it.
    M excluded = stripped;
    int cls = ctx.twin[static_cast<std::size_t>(anchor)];
    stripped.for_each([&](int v) {
      if (ctx.twin[static_cast<std::size_t>(v)] == cls) excluded.reset(v);
    });
    if (search(excluded, left)) return true;

    if (memo_entries < memo_entry_limit) {
      memo.insert(stripped);
      ++memo_entries;
    }
    return false;
  }

private:
  // Per-invocation enumeration state; nested search() calls build their own.
  struct Arms {
    int anchor;
    M avail;
    std::vector<int> left_arm, right_arm;
  };

  bool paths_through(int anchor, const M& avail, int left) {
    Arms st{anchor, avail, {}, {}};
    // Anchor position along the path, up to reversal.
    for (int pos = 0; pos <= (l - 1) / 2; ++pos) {
      M used = M::empty(ctx.n);
      used.set(anchor);
      if (extend(st, pos, l - 1 - pos, used, left)) return true;
    }
    return false;
  }

  bool extend(Arms& st, int need_left, int need_right, M used, int left) {
    if (static_cast<int>(st.left_arm.size()) == need_left &&
        static_cast<int>(st.right_arm.size()) == need_right) {
      std::vector<int> path(st.left_arm.rbegin(), st.left_arm.rend());
      path.push_back(st.anchor);
      path.insert(path.end(), st.right_arm.begin(), st.right_arm.end());
      if (search(st.avail.minus(used), left - 1)) {
        placed.push_back(std::move(path));
        return true;
      }
      return false;
    }
    bool on_left = static_cast<int>(st.left_arm.size()) < need_left;
    auto& arm = on_left ? st.left_arm : st.right_arm;
    int tip = arm.empty() ? st.anchor : arm.back();
    M cands = ctx.rows[static_cast<std::size_t>(tip)] & st.avail.minus(used);
    std::vector<int> tried_classes;
    bool found = false;
    cands.for_each([&](int u) {
      if (found) return;
      int cls = ctx.twin[static_cast<std::size_t>(u)];
      if (std::find(tried_classes.begin(), tried_classes.end(), cls) !=
          tried_classes.end())
        return;
      tried_classes.push_back(cls);
      arm.push_back(u);
      M used2 = used;
      used2.set(u);
      if (extend(st, need_left, need_right, used2, left)) found = true;
      arm.pop_back();
    });
    return found;
  }
};

// ---------------------------------------------------------------------------
// Longest path: DFS over (visited-set, endpoint) states with reachability
// bound, twin collapsing, and a budget-capped visited-state table.
// ---------------------------------------------------------------------------

template <class M>
struct LongestPathSearch {
  const SearchCtx<M>& ctx;
  std::unordered_map<M, M, MaskHash<M>> seen;  // path mask -> endpoints done
  std::size_t entry_limit;
  int best = 0;
  std::vector<int> best_path;
  std::vector<int> path;

  LongestPathSearch(const SearchCtx<M>& ctx, const DetectorOptions& opt)
      : ctx(ctx) {
    std::size_t per_entry = 48 + 2 * M::empty(ctx.n).bytes();
    entry_limit = opt.memo_budget_bytes / per_entry;
  }

  int reachable_count(int from, const M& avail) const {
    M reach = ctx.rows[static_cast<std::size_t>(from)] & avail;
    M frontier = reach;
    while (!frontier.none()) {
      M next = M::empty(ctx.n);
      frontier.for_each([&](int v) {
        next |= ctx.rows[static_cast<std::size_t>(v)];
      });
      next &= avail;
      next = next.minus(reach);
      reach |= next;
      frontier = std::move(next);
    }
    return reach.count();
  }

  void dfs(int last, M mask, int depth) {
    if (depth > best) {
      best = depth;
      best_path = path;
    }
    if (best == ctx.n) return;
    M avail = ctx.full.minus(mask);
    if (depth + reachable_count(last, avail) <= best) return;
    auto it = seen.find(mask);
    if (it != seen.end()) {
      if (it->second.test(last)) return;
      it->second.set(last);
    } else if (seen.size() < entry_limit) {
      M endpoints = M::empty(ctx.n);
      endpoints.set(last);
      seen.emplace(mask, std::move(endpoints));
    }
    std::vector<std::pair<int, int>> cands;  // (available degree, vertex)
    std::vector<int> tried_classes;
    (ctx.rows[static_cast<std::size_t>(last)] & avail).for_each([&](int u) {
      int cls = ctx.twin[static_cast<std::size_t>(u)];
      if (std::find(tried_classes.begin(), tried_classes.end(), cls) !=
          tried_classes.end())
        return;
      tried_classes.push_back(cls);
      cands.emplace_back(ctx.avail_degree(u, avail), u);
    });
    std::sort(cands.begin(), cands.end());
    for (auto [d, u] : cands) {
      if (best == ctx.n) return;
      path.push_back(u);
      M mask2 = mask;
      mask2.set(u);
      dfs(u, mask2, depth + 1);
      path.pop_back();
    }
  }

  int run() {
    if (ctx.n == 0) return 0;
    std::vector<int> tried_classes;
    for (int v = 0; v < ctx.n; ++v) {
      if (best == ctx.n) break;
      int cls = ctx.twin[static_cast<std::size_t>(v)];
      if (std::find(tried_classes.begin(), tried_classes.end(), cls) !=
          tried_classes.end())
        continue;
      tried_classes.push_back(cls);
      path = {v};
      M mask = M::empty(ctx.n);
      mask.set(v);
      dfs(v, mask, 1);
    }
    return best;
  }
};

// ---------------------------------------------------------------------------
// Forest embedding: components largest first, each rooted at its centroid,
// children by subtree size descending (leaves last), identical components
// forced to use increasing root images.
// ---------------------------------------------------------------------------

struct RootedComponent {
  std::vector<int> order;       // pattern vertices in assignment order
  std::vector<int> parent_pos;  // index into order; -1 for the root
  GraphCode code;
  int size() const { return static_cast<int>(order.size()); }
};

std::vector<std::vector<int>> graph_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> stack = {root};
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<int> comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int tree_centroid(const Graph& f, const std::vector<int>& comp) {
  if (comp.size() == 1) return comp[0];
  // Subtree sizes from an arbitrary root; the centroid minimizes the largest
  // piece of the tree after its removal. comp is ascending, so the loop
  // below picks the smaller of two adjacent centroids.
  int root = comp[0];
  std::vector<int> order = {root};
  std::map<int, int> parent;
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    f.for_each_neighbor(v, [&](int u) {
      if (!parent.contains(u)) {
        parent[u] = v;
        order.push_back(u);
      }
    });
  }
  std::map<int, int> sub;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    sub[*it] += 1;
    if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
  }
  int total = static_cast<int>(comp.size());
  int best_v = -1, best_score = std::numeric_limits<int>::max();
  for (int v : comp) {
    int score = total - sub[v];
    f.for_each_neighbor(v, [&](int u) {
      if (parent[u] == v) score = std::max(score, sub[u]);
    });
    if (score < best_score) {
      best_score = score;
      best_v = v;
    }
  }
  return best_v;
}

RootedComponent root_component(const Graph& f, const std::vector<int>& comp) {
  RootedComponent rc;
  rc.code = canonical_code(induced_subgraph(f, comp));
  int root = tree_centroid(f, comp);
  // Subtree sizes below each vertex for the child ordering.
  std::map<int, int> parent;
  std::vector<int> bfs = {root};
  parent[root] = -1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    f.for_each_neighbor(v, [&](int u) {
      if (!parent.contains(u)) {
        parent[u] = v;
        bfs.push_back(u);
      }
    });
  }
  std::map<int, int> sub;
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    sub[*it] += 1;
    if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
  }
  // Assignment order: preorder, children by subtree size descending so the
  // leaves are matched last.
  std::map<int, int> pos;
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    pos[v] = static_cast<int>(rc.order.size());
    rc.order.push_back(v);
    rc.parent_pos.push_back(parent[v] < 0 ? -1 : pos[parent[v]]);
    std::vector<int> children;
    f.for_each_neighbor(v, [&](int u) {
      if (parent[u] == v) children.push_back(u);
    });
    std::sort(children.begin(), children.end(), [&](int a, int b) {
      if (sub[a] != sub[b]) return sub[a] < sub[b];
      return a > b;
    });  // stack reverses: largest subtree assigned first
    for (int c : children) stack.push_back(c);
  }
  return rc;
}

template <class M>
struct ForestEmbedder {
  const SearchCtx<M>& ctx;
  std::vector<RootedComponent> comps;  // largest first
  std::vector<std::vector<int>> images;  // per comp, aligned with comp order
  std::vector<int> image_stack;
  int remaining_total = 0;

  ForestEmbedder(const SearchCtx<M>& ctx, const Graph& f) : ctx(ctx) {
    for (auto& comp : graph_components(f))
      comps.push_back(root_component(f, comp));
    std::stable_sort(comps.begin(), comps.end(),
                     [](const RootedComponent& a, const RootedComponent& b) {
                       if (a.size() != b.size()) return a.size() > b.size();
                       return a.code < b.code;
                     });
  }

  bool embed(std::size_t ci, M avail, int min_root) {
    if (ci == comps.size()) return true;
    int rest = 0;
    for (std::size_t j = ci; j < comps.size(); ++j) rest += comps[j].size();
    if (avail.count() < rest) return false;
    return assign(ci, 0, avail, min_root);
  }

  bool assign(std::size_t ci, int pi, M avail, int min_root) {
    const auto& comp = comps[ci];
    if (pi == comp.size()) {
      auto base = image_stack.size() - static_cast<std::size_t>(comp.size());
      int root_image = image_stack[base];
      bool next_identical =
          ci + 1 < comps.size() && comps[ci + 1].code == comp.code;
      images.emplace_back(image_stack.begin() + static_cast<std::ptrdiff_t>(base),
                          image_stack.end());
      if (embed(ci + 1, avail, next_identical ? root_image : -1)) return true;
      images.pop_back();
      return false;
    }
    M cands;
    if (comp.parent_pos[static_cast<std::size_t>(pi)] < 0) {
      cands = avail;
    } else {
      int parent_image = image_stack[image_stack.size() -
                                     static_cast<std::size_t>(pi) +
                                     static_cast<std::size_t>(
                                         comp.parent_pos[static_cast<std::size_t>(pi)])];
      cands = ctx.rows[static_cast<std::size_t>(parent_image)] & avail;
    }
    std::vector<int> tried_classes;
    bool found = false;
    cands.for_each([&](int u) {
      if (found) return;
      if (pi == 0 && u <= min_root) return;
      int cls = ctx.twin[static_cast<std::size_t>(u)];
      if (std::find(tried_classes.begin(), tried_classes.end(), cls) !=
          tried_classes.end())
        return;
      tried_classes.push_back(cls);
      image_stack.push_back(u);
      M avail2 = avail;
      avail2.reset(u);
      if (assign(ci, pi + 1, avail2, min_root)) found = true;
      image_stack.pop_back();
    });
    return found;
  }
};

// ---------------------------------------------------------------------------

template <class M>
bool contains_impl(const Graph& g, const PatternSpec& p, Witness* witness,
                   const DetectorOptions& options) {
  SearchCtx<M> ctx = make_ctx<M>(g);
  if (p.kind() == PatternSpec::Kind::forest) {
    ForestEmbedder<M> embedder(ctx, p.forest());
    if (!embedder.embed(0, ctx.full, -1)) return false;
    if (witness) {
      witness->components.clear();
      for (std::size_t ci = 0; ci < embedder.comps.size(); ++ci) {
        const auto& comp = embedder.comps[ci];
        // Align image list with ascending pattern vertices.
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t j = 0; j < comp.order.size(); ++j)
          pairs.emplace_back(comp.order[j], embedder.images[ci][j]);
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> imgs;
        for (auto& [pv, img] : pairs) imgs.push_back(img);
        witness->components.push_back(std::move(imgs));
      }
    }
    return true;
  }
  int k = p.kind() == PatternSpec::Kind::single_path ? 1 : p.path_count();
  PackSearcher<M> searcher(ctx, p.path_length(), k, options);
  if (!searcher.search(ctx.full, k)) return false;
  if (witness) {
    witness->components.assign(searcher.placed.rbegin(),
                               searcher.placed.rend());
  }
  return true;
}

template <class M>
int longest_path_impl(const Graph& g, Witness* witness,
                      const DetectorOptions& options) {
  SearchCtx<M> ctx = make_ctx<M>(g);
  LongestPathSearch<M> search(ctx, options);
  int best = search.run();
  if (witness) witness->components = {search.best_path};
  return best;
}

}  // namespace

PatternSpec PatternSpec::disjoint_paths(int k, int l) {
  if (k < 1) throw DomainError("path count k must be at least 1");
  if (l < 2) throw DomainError("path length l must be at least 2 vertices");
  PatternSpec p;
  p.kind_ = Kind::k_disjoint_paths;
  p.k_ = k;
  p.l_ = l;
  return p;
}

PatternSpec PatternSpec::single_path(int l) {
  if (l < 2) throw DomainError("path length l must be at least 2 vertices");
  PatternSpec p;
  p.kind_ = Kind::single_path;
  p.k_ = 1;
  p.l_ = l;
  return p;
}

PatternSpec PatternSpec::forest_pattern(Graph f) {
  if (!is_forest(f)) throw DomainError("forest pattern must be acyclic");
  PatternSpec p;
  p.kind_ = Kind::forest;
  p.forest_ = std::move(f);
  return p;
}

PatternSpec PatternSpec::parse(std::string_view text) {
  std::size_t pos = 0;
  auto read_int = [&](const char* what) -> long long {
    std::size_t at = pos;
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError(std::string("expected ") + what, at);
    long long x = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      x = x * 10 + (text[pos] - '0');
      if (x > 1000000) throw ParseError("number out of range", at);
      ++pos;
    }
    return x;
  };
  long long k = 1;
  if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    k = read_int("a path count");
    if (pos >= text.size() || text[pos] != '*')
      throw ParseError("expected '*' after the path count", pos);
    ++pos;
  }
  if (pos >= text.size() || text[pos] != 'P')
    throw ParseError("expected 'P'", pos);
  ++pos;
  long long l = read_int("a path length");
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (k < 1) throw ParseError("path count must be at least 1", 0);
  if (l < 2) throw ParseError("path length must be at least 2", 0);
  if (k == 1) return single_path(static_cast<int>(l));
  return disjoint_paths(static_cast<int>(k), static_cast<int>(l));
}

int PatternSpec::vertex_count() const {
  return kind_ == Kind::forest ? forest_.order() : k_ * l_;
}

std::string PatternSpec::to_string() const {
  switch (kind_) {
    case Kind::single_path: return "P" + std::to_string(l_);
    case Kind::k_disjoint_paths:
      return std::to_string(k_) + "*P" + std::to_string(l_);
    case Kind::forest:
      return "forest(n=" + std::to_string(forest_.order()) +
             ",m=" + std::to_string(forest_.edge_count()) + ")";
  }
  return "?";
}

std::vector<int> Witness::all_vertices() const {
  std::vector<int> out;
  for (const auto& c : components) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<std::vector<int>> pattern_components(const PatternSpec& p) {
  std::vector<std::vector<int>> out;
  if (p.kind() == PatternSpec::Kind::forest) {
    std::vector<RootedComponent> comps;
    for (auto& comp : graph_components(p.forest()))
      comps.push_back(root_component(p.forest(), comp));
    std::stable_sort(comps.begin(), comps.end(),
                     [](const RootedComponent& a, const RootedComponent& b) {
                       if (a.size() != b.size()) return a.size() > b.size();
                       return a.code < b.code;
                     });
    for (auto& rc : comps) {
      std::vector<int> verts = rc.order;
      std::sort(verts.begin(), verts.end());
      out.push_back(std::move(verts));
    }
    return out;
  }
  int k = p.kind() == PatternSpec::Kind::single_path ? 1 : p.path_count();
  for (int c = 0; c < k; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < p.path_length(); ++i)
      verts.push_back(c * p.path_length() + i);
    out.push_back(std::move(verts));
  }
  return out;
}

int longest_path(const Graph& g, Witness* witness,
                 const DetectorOptions& options) {
  if (g.order() <= 64) return longest_path_impl<Mask64>(g, witness, options);
  return longest_path_impl<MaskW>(g, witness, options);
}

bool contains_pattern(const Graph& g, const PatternSpec& p, Witness* witness,
                      const DetectorOptions& options) {
  if (p.vertex_count() > g.order()) return false;
  if (p.vertex_count() == 0) {
    if (witness) witness->components.clear();
    return true;
  }
  if (g.order() <= 64) return contains_impl<Mask64>(g, p, witness, options);
  return contains_impl<MaskW>(g, p, witness, options);
}

bool witness_embeds(const Graph& g, const PatternSpec& p, const Witness& w) {
  auto comps = pattern_components(p);
  if (w.components.size() != comps.size()) return false;
  std::vector<int> used;
  for (const auto& c : w.components)
    for (int v : c) {
      if (v < 0 || v >= g.order()) return false;
      used.push_back(v);
    }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;

  if (p.kind() != PatternSpec::Kind::forest) {
    for (const auto& path : w.components) {
      if (static_cast<int>(path.size()) != p.path_length()) return false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    return true;
  }
  const Graph& f = p.forest();
  std::vector<int> image(static_cast<std::size_t>(f.order()), -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    if (comps[ci].size() != w.components[ci].size()) return false;
    for (std::size_t j = 0; j < comps[ci].size(); ++j)
      image[static_cast<std::size_t>(comps[ci][j])] = w.components[ci][j];
  }
  for (auto [u, v] : f.edges())
    if (!g.has_edge(image[static_cast<std::size_t>(u)],
                    image[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

std::vector<int> common_neighborhood(const Graph& g,
                                     const std::vector<int>& u) {
  if (u.empty())
    throw DomainError("common neighborhood of the empty set is undefined");
  for (int v : u)
    if (v < 0 || v >= g.order()) throw DomainError("vertex out of range");
  std::vector<bool> in(static_cast<std::size_t>(g.order()), true);
  for (int v : u) {
    std::vector<bool> nb(static_cast<std::size_t>(g.order()), false);
    g.for_each_neighbor(v, [&](int w) { nb[static_cast<std::size_t>(w)] = true; });
    for (int w = 0; w < g.order(); ++w)
      if (!nb[static_cast<std::size_t>(w)]) in[static_cast<std::size_t>(w)] = false;
  }
  for (int v : u) in[static_cast<std::size_t>(v)] = false;
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w)
    if (in[static_cast<std::size_t>(w)]) out.push_back(w);
  return out;
}

std::pair<std::vector<int>, int> find_high_codegree_subset(const Graph& g,
                                                           const Witness& copy,
                                                           int t) {
  std::vector<int> verts = copy.all_vertices();
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw DomainError("witness vertices are not distinct");
  int r = static_cast<int>(verts.size());
  if (t < 1 || t > r) throw DomainError("t must satisfy 1 <= t <= |copy|");
  for (int v : verts)
    if (v < 0 || v >= g.order())
      throw DomainError("witness vertex outside the graph");

  std::vector<int> best_subset;
  int best_codeg = -1;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> subset;
    for (int i : idx) subset.push_back(verts[static_cast<std::size_t>(i)]);
    int codeg = static_cast<int>(common_neighborhood(g, subset).size());
    if (codeg > best_codeg) {
      best_codeg = codeg;
      best_subset = subset;  // lexicographic order of enumeration breaks ties
    }
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - t + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {best_subset, best_codeg};
}

std::vector<std::vector<int>> build_codegree_hypergraph(
    const Graph& g, int l, int threshold, const DetectorOptions& options) {
  if (l < 4) throw DomainError("l must be at least 4");
  std::set<std::vector<int>> hyperedges;
  long long emitted = 0;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);

  auto emit = [&](const std::vector<int>& copy) {
    Witness w;
    w.components = {copy};
    auto [subset, codeg] = find_high_codegree_subset(g, w, l / 2);
    if (codeg >= threshold) hyperedges.insert(subset);
  };

  auto dfs = [&](auto&& self, int last) -> bool {
    if (static_cast<int>(path.size()) == l) {
      if (path.front() < path.back()) {  // each copy once, up to reversal
        emit(path);
        if (++emitted >= options.path_copy_cap) return true;
      }
      return false;
    }
    bool stop = false;
    g.for_each_neighbor(last, [&](int u) {
      if (stop || used[static_cast<std::size_t>(u)]) return;
      used[static_cast<std::size_t>(u)] = true;
      path.push_back(u);
      if (self(self, u)) stop = true;
      path.pop_back();
      used[static_cast<std::size_t>(u)] = false;
    });
    return stop;
  };

  for (int start = 0; start < g.order(); ++start) {
    path = {start};
    used.assign(static_cast<std::size_t>(g.order()), false);
    used[static_cast<std::size_t>(start)] = true;
    if (dfs(dfs, start)) break;
  }
  return {hyperedges.begin(), hyperedges.end()};
}

Graph flatten_hypergraph(int n, const std::vector<std::vector<int>>& hyperedges) {
  GraphBuilder b(n);
  for (const auto& he : hyperedges)
    for (std::size_t i = 0; i < he.size(); ++i)
      for (std::size_t j = i + 1; j < he.size(); ++j)
        if (he[i] != he[j]) b.add_edge(he[i], he[j]);
  return std::move(b).build();
}

bool is_intersecting(const std::vector<std::vector<int>>& hyperedges) {
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    std::set<int> a(hyperedges[i].begin(), hyperedges[i].end());
    for (std::size_t j = i + 1; j < hyperedges.size(); ++j) {
      bool share = false;
      for (int v : hyperedges[j])
        if (a.contains(v)) {
          share = true;
          break;
        }
      if (!share) return false;
    }
  }
  return true;
}

bool is_pattern_free_certificate(const Graph& g, const PatternSpec& p,
                                 const std::vector<int>& cover,
                                 const DetectorOptions& options) {
  for (int v : cover)
    if (v < 0 || v >= g.order()) throw DomainError("cover vertex out of range");
  std::vector<int> keep;
  std::vector<bool> in_cover(static_cast<std::size_t>(g.order()), false);
  for (int v : cover) in_cover[static_cast<std::size_t>(v)] = true;
  for (int v = 0; v < g.order(); ++v)
    if (!in_cover[static_cast<std::size_t>(v)]) keep.push_back(v);
  Graph rest = induced_subgraph(g, keep);

  if (p.kind() != PatternSpec::Kind::forest)
    return !contains_pattern(rest, PatternSpec::single_path(p.path_length()),
                             nullptr, options);

  std::set<GraphCode> seen;
  for (const auto& comp : graph_components(p.forest())) {
    Graph tree = induced_subgraph(p.forest(), comp);
    GraphCode code = canonical_code(tree);
    if (!seen.insert(code).second) continue;
    if (tree.order() == 1) {
      if (rest.order() >= 1) return false;
      continue;
    }
    if (contains_pattern(rest, PatternSpec::forest_pattern(tree), nullptr,
                         options))
      return false;
  }
  return true;
}

}  // namespace turan
