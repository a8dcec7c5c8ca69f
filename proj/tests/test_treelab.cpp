#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/naive.hpp"
#include "turan/graph.hpp"
#include "turan/treelab.hpp"

using namespace turan;

namespace {

// Double star S_{2,2}: centers 0,1; leaves 2,3 on 0 and 4,5 on 1.
Graph double_star_22() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

}  // namespace

TEST_CASE("bipartition by BFS layering") {
  Bipartition p6 = bipartition(Graph::path(6));
  CHECK(p6.side_a.size() == 3);
  CHECK(p6.side_b.size() == 3);
  CHECK(std::find(p6.side_a.begin(), p6.side_a.end(), 0) != p6.side_a.end());

  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Bipartition ps = bipartition(star);
  CHECK(ps.side_a.size() == 1);
  CHECK(ps.side_b.size() == 4);

  Bipartition ds = bipartition(double_star_22());
  CHECK(ds.side_a == std::vector<int>{0, 4, 5});
  CHECK(ds.side_b == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(bipartition(Graph::complete(3)), DomainError);
  CHECK_THROWS_AS(bipartition(Graph::matching(4)), DomainError);  // disconnected
}

TEST_CASE("equibipartite recognition") {
  CHECK(is_equibipartite(Graph::path(6)));
  CHECK_FALSE(is_equibipartite(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(is_equibipartite(disjoint_union(Graph::path(2), double_star_22())));
  CHECK_THROWS_AS(is_equibipartite(Graph::complete(3)), DomainError);
}

TEST_CASE("perfect matchings") {
  CHECK(has_perfect_matching(Graph::path(6)));
  CHECK_FALSE(has_perfect_matching(double_star_22()));
  CHECK_FALSE(has_perfect_matching(Graph::path(5)));
  std::vector<std::pair<int, int>> m;
  CHECK(has_perfect_matching(Graph::path(4), &m));
  CHECK(m == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(has_perfect_matching(Graph::complete(4)));   // non-bipartite branch
  CHECK_FALSE(has_perfect_matching(Graph::complete(5)));
  CHECK(has_perfect_matching(Graph::empty_graph(0)));
  CHECK_FALSE(has_perfect_matching(Graph::empty_graph(2)));
}

TEST_CASE("matching agrees with leaf peeling on all trees up to 8") {
  for (int n = 2; n <= 8; ++n)
    for (const Graph& t : naive::all_labeled_trees(n))
      CHECK(has_perfect_matching(t) == naive::forest_perfect_matching(t));
}

TEST_CASE("a forest has a perfect matching iff every component does") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph a = random_equibipartite_tree(2 + 2 * static_cast<int>(seed % 3), seed);
    Graph b = random_equibipartite_tree(4, seed + 1000);
    Graph f = disjoint_union(a, b);
    CHECK(has_perfect_matching(f) ==
          (has_perfect_matching(a) && has_perfect_matching(b)));
  }
}

TEST_CASE("Hall violators") {
  Graph ds = double_star_22();
  // Side B = {1,2,3}: vertices 2,3 (leaves of 0) have N = {0}: minimal
  // violator {2,3}.
  std::vector<int> s = hall_violator(ds, Side::b);
  CHECK(s == std::vector<int>{2, 3});
  std::vector<int> sa = hall_violator(ds, Side::a);
  CHECK(sa == std::vector<int>{4, 5});
  CHECK_THROWS_AS(hall_violator(Graph::path(4), Side::a), DomainError);
  CHECK_THROWS_AS(hall_violator(Graph::path(4), Side::b), DomainError);
}

TEST_CASE("Hall violator properties on random no-PM trees") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 40 && seed < 4000; ++seed) {
    Graph t = random_equibipartite_tree(8 + 2 * static_cast<int>(seed % 3), seed);
    if (has_perfect_matching(t)) continue;
    ++tested;
    Bipartition bp = bipartition(t);
    for (Side side : {Side::a, Side::b}) {
      std::vector<int> s = hall_violator(t, side);
      std::set<int> ns;
      for (int v : s)
        t.for_each_neighbor(v, [&](int u) { ns.insert(u); });
      CHECK(ns.size() < s.size());
      // S u N(S) induces a connected subgraph (minimality certificate).
      std::vector<int> both(s.begin(), s.end());
      both.insert(both.end(), ns.begin(), ns.end());
      std::sort(both.begin(), both.end());
      CHECK(is_connected(induced_subgraph(t, both)));
    }
  }
  CHECK(tested == 40);
}

TEST_CASE("no-PM partition certificate for the double star") {
  PartitionCert cert = nopm_partition(double_star_22());
  CHECK(cert.small_class.size() == 2);
  CHECK(cert.large_class.size() == 4);
  CHECK(cert.small_edge == std::pair<int, int>{0, 1});
  CHECK(cert.small_class == std::vector<int>{0, 1});
  CHECK_THROWS_AS(nopm_partition(Graph::path(6)), DomainError);
  CHECK_THROWS_AS(nopm_partition(Graph::path(5)), DomainError);
}

TEST_CASE("certificates for every no-PM equibipartite tree up to 12") {
  long long nopm_seen = 0;
  for (int two_l = 2; two_l <= 12; two_l += 2) {
    for (const Graph& t : enumerate_equibipartite_trees(two_l)) {
      if (has_perfect_matching(t)) continue;
      ++nopm_seen;
      PartitionCert cert = nopm_partition(t);
      CHECK(cert.small_class.size() < cert.large_class.size());
      CHECK(static_cast<int>(cert.small_class.size()) < two_l / 2);
      std::vector<bool> in_small(static_cast<std::size_t>(two_l), false);
      for (int v : cert.small_class) in_small[static_cast<std::size_t>(v)] = true;
      long long small_edges = 0, large_edges = 0;
      for (auto [u, v] : t.edges()) {
        if (in_small[static_cast<std::size_t>(u)] && in_small[static_cast<std::size_t>(v)])
          ++small_edges;
        if (!in_small[static_cast<std::size_t>(u)] && !in_small[static_cast<std::size_t>(v)])
          ++large_edges;
      }
      CHECK(small_edges == 1);
      CHECK(large_edges == 0);
    }
  }
  CHECK(nopm_seen > 0);
}

TEST_CASE("unequal partition scan") {
  CHECK(check_all_unequal_partitions(Graph::path(4)));
  std::vector<int> violator;
  CHECK_FALSE(check_all_unequal_partitions(double_star_22(), &violator));
  CHECK(violator == std::vector<int>{2, 3, 4, 5});
  CHECK_THROWS_AS(check_all_unequal_partitions(Graph::empty_graph(24)),
                  DomainError);
}

TEST_CASE("partition scan equals matching status on equibipartite trees") {
  for (int two_l = 2; two_l <= 12; two_l += 2)
    for (const Graph& t : enumerate_equibipartite_trees(two_l))
      CHECK(check_all_unequal_partitions(t) == has_perfect_matching(t));
}

TEST_CASE("tree enumeration counts") {
  const long long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n)
    CHECK(static_cast<long long>(enumerate_trees(n).size()) == expected[n]);
}

TEST_CASE("equibipartite tree enumeration") {
  auto t2 = enumerate_equibipartite_trees(2);
  CHECK(t2.size() == 1);
  CHECK(t2[0] == Graph::path(2));
  auto t4 = enumerate_equibipartite_trees(4);
  CHECK(t4.size() == 1);
  CHECK(canonical_code(t4[0]) == canonical_code(Graph::path(4)));
  CHECK_THROWS_AS(enumerate_equibipartite_trees(5), DomainError);

  // Counts against brute force over all labeled trees.
  for (int n = 4; n <= 8; n += 2) {
    std::set<std::string> expected;
    for (const Graph& t : naive::all_labeled_trees(n))
      if (is_equibipartite(t)) expected.insert(canonical_code(t).bytes);
    CHECK(enumerate_equibipartite_trees(n).size() == expected.size());
  }
}

TEST_CASE("random equibipartite trees are deterministic and valid") {
  for (int two_l : {2, 4, 8, 12}) {
    Graph a = random_equibipartite_tree(two_l, 42);
    Graph b = random_equibipartite_tree(two_l, 42);
    CHECK(a == b);
    CHECK(is_equibipartite(a));
    CHECK(is_connected(a));
    CHECK(a.edge_count() == two_l - 1);
  }
  CHECK(random_equibipartite_tree(6, 1) == random_equibipartite_tree(6, 1));
  CHECK_THROWS_AS(random_equibipartite_tree(5, 1), DomainError);
}

TEST_CASE("forest validation") {
  Graph two_p2 = disjoint_union(Graph::path(2), Graph::path(2));
  ForestInfo info = validate_forest(two_p2);
  CHECK(info.l == 2);
  CHECK(info.component_count == 2);
  CHECK(info.has_perfect_matching);

  Graph mixed = disjoint_union(Graph::path(2), double_star_22());
  ForestInfo minfo = validate_forest(mixed);
  CHECK(minfo.l == 4);
  CHECK(minfo.component_count == 2);
  CHECK_FALSE(minfo.has_perfect_matching);

  CHECK_THROWS_WITH_AS(validate_forest(Graph::path(6)),
                       doctest::Contains("at least two trees"), DomainError);
  CHECK_THROWS_WITH_AS(validate_forest(Graph::complete(3)),
                       doctest::Contains("cycle"), DomainError);
  Graph unbalanced = disjoint_union(
      Graph::path(2), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK_THROWS_WITH_AS(validate_forest(unbalanced),
                       doctest::Contains("unequal sides"), DomainError);
}
