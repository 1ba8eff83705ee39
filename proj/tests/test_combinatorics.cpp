#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hurwitz/json_io.hpp>
#include <hurwitz/oracles.hpp>
#include <hurwitz/pattern_graph.hpp>
#include <hurwitz/two_fold_graph.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hurwitz;
namespace tu = hurwitz::testutil;

TEST_CASE("partition enumeration and validation") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0).front() == Partition());
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK(Partition({1, 3, 2}).parts == std::vector<int>{3, 2, 1});
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation({0, 1, 2})) == Partition({1, 1, 1}));
  CHECK(cycle_type(Permutation({1, 0, 2})) == Partition({2, 1}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);

  // Conjugation invariance: cycle_type(t s t^-1) = cycle_type(s).
  std::mt19937 rng(42);
  auto s6 = symmetric_group(6);
  std::uniform_int_distribution<size_t> pick(0, s6.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation& s = s6[pick(rng)];
    const Permutation& t = s6[pick(rng)];
    Permutation conj = t.compose(s).compose(t.inverse());
    CHECK(cycle_type(conj) == cycle_type(s));
  }
}

TEST_CASE("cycle graphs") {
  PatternGraph l = PatternGraph::cycle_graph(Partition({1}));
  CHECK(l.vertex_count() == 1);
  CHECK(l.mult(0, 0) == 1);

  PatternGraph c2 = PatternGraph::cycle_graph(Partition({2}));
  CHECK(c2 == tu::two_cycle());

  PatternGraph c21 = PatternGraph::cycle_graph(Partition({2, 1}));
  CHECK(c21.vertex_count() == 3);
  CHECK(c21.edge_count() == 3);
  CHECK(c21.is_cycle_union());
  CHECK(c21.cycle_type() == Partition({2, 1}));

  CHECK(PatternGraph::cycle_graph(Partition()).is_empty());
}

TEST_CASE("canonical form is relabeling-invariant and idempotent") {
  std::mt19937 rng(123);
  std::vector<PatternGraph> pool = {
      tu::edge(),      tu::loop(),          tu::double_edge(),
      tu::two_cycle(), tu::double_loop(),   tu::two_edges_disjoint(),
      tu::out_star2(), tu::in_star2(),      PatternGraph::cycle_graph(Partition({3, 2, 1})),
      PatternGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
  };
  for (int e = 1; e <= 6; ++e)
    for (int i = 0; i < 4; ++i) pool.push_back(tu::random_graph(rng, e));

  for (const auto& g : pool) {
    // Idempotence: rebuilding the class from its canonical matrix changes nothing.
    CHECK(PatternGraph::from_matrix(g.vertex_count(), g.matrix()) == g);
    for (int trial = 0; trial < 100; ++trial) {
      PatternGraph r = tu::relabeled(rng, g);
      CHECK(r == g);
      CHECK(r.aut_order() == g.aut_order());
    }
  }
}

TEST_CASE("automorphism counts match brute force up to 8 vertices") {
  std::mt19937 rng(321);
  std::vector<PatternGraph> pool = {
      tu::two_edges_disjoint(),  // aut 2 (swap the two edges)
      tu::loop().disjoint_union(tu::loop()),  // aut 2
      tu::edge(),
      tu::double_edge(),
      tu::two_cycle(),
      PatternGraph::cycle_graph(Partition({4})),
      PatternGraph::cycle_graph(Partition({2, 2})),
      PatternGraph::cycle_graph(Partition({1, 1, 1})),
      PatternGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}),
      PatternGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
  };
  for (int e = 1; e <= 5; ++e)
    for (int i = 0; i < 6; ++i) {
      PatternGraph g = tu::random_graph(rng, e);
      if (g.vertex_count() <= 8) pool.push_back(g);
    }

  CHECK(tu::two_edges_disjoint().aut_order() == 2);
  CHECK(tu::loop().disjoint_union(tu::loop()).aut_order() == 2);

  for (const auto& g : pool) {
    REQUIRE(g.vertex_count() <= 8);
    CHECK(g.aut_order() == brute_force_aut_order(g.vertex_count(), g.matrix()));
    CHECK(factorial(g.vertex_count()) % BigInt(g.aut_order()) == 0);
  }

  // The edge-level variant multiplies in one factorial per parallel family.
  CHECK(tu::double_edge().aut_order_with_edge_factor() == 2);   // 1 * 2!
  CHECK(tu::double_loop().aut_order_with_edge_factor() == 2);   // 1 * 2!
  CHECK(tu::loop().aut_order_with_edge_factor() == 1);
  CHECK(tu::two_edges_disjoint().aut_order_with_edge_factor() == 2);  // 2 * 1
  PatternGraph triple = PatternGraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(triple.aut_order_with_edge_factor() == 6);  // 1 * 3!
}

TEST_CASE("quotients") {
  // Merging the two ends of an edge gives a loop.
  CHECK(tu::edge().quotient(SetPartition({0, 0})) == tu::loop());
  // The all-singleton partition changes nothing.
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    PatternGraph g = tu::random_graph(rng, 4);
    CHECK(g.quotient(SetPartition::singletons(g.vertex_count())) == g);
  }
  // Two disjoint edges with merged tails: one source of out-degree 2.
  PatternGraph wedge = tu::two_edges_disjoint();
  // Canonical labels are unknown; find the two tails explicitly.
  std::vector<int> tails;
  for (int v = 0; v < 4; ++v)
    if (wedge.out_degree(v) == 1) tails.push_back(v);
  REQUIRE(tails.size() == 2);
  std::vector<std::vector<int>> blocks = {tails};
  for (int v = 0; v < 4; ++v)
    if (wedge.out_degree(v) == 0) blocks.push_back({v});
  CHECK(wedge.quotient(SetPartition::from_blocks(4, blocks)) == tu::out_star2());

  CHECK_THROWS_AS(tu::edge().quotient(SetPartition({0})), std::invalid_argument);
}

TEST_CASE("isolated vertices are rejected") {
  CHECK_THROWS_AS(PatternGraph::from_edges(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PatternGraph::from_matrix(1, {0}), std::invalid_argument);
}

TEST_CASE("partition lattice Mobius function") {
  CHECK(partition_mobius(SetPartition::singletons(4)) == 1);
  CHECK(partition_mobius(SetPartition({0, 0, 1, 2})) == -1);
  CHECK(partition_mobius(SetPartition({0, 0, 0})) == 2);

  // sum over all partitions of a k-set of mobius = 0 for k >= 2
  for (int k = 2; k <= 7; ++k) {
    long long sum = 0;
    long long count = 0;
    for_each_set_partition(k, [&](const SetPartition& sp) {
      sum += partition_mobius(sp);
      ++count;
    });
    CHECK(sum == 0);
    static const long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    CHECK(count == bell[k]);
  }
}

TEST_CASE("set partition validation") {
  CHECK_THROWS_AS(SetPartition({0, 2}), std::invalid_argument);  // not restricted growth
  CHECK_THROWS_AS(SetPartition::from_blocks(2, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_blocks(2, {{0, 1}, {1}}), std::invalid_argument);
  CHECK(SetPartition::from_blocks(3, {{2}, {0, 1}}) == SetPartition({0, 0, 1}));
}

TEST_CASE("two-fold canonical form and validation") {
  // Same class under independent row/column permutations.
  TwoFoldGraph a = TwoFoldGraph::from_biadjacency(2, 2, {2, 0, 0, 1});
  TwoFoldGraph b = TwoFoldGraph::from_biadjacency(2, 2, {1, 0, 0, 2});
  TwoFoldGraph c = TwoFoldGraph::from_biadjacency(2, 2, {0, 1, 2, 0});
  CHECK(a == b);
  CHECK(a == c);

  CHECK_THROWS_AS(TwoFoldGraph::from_biadjacency(2, 1, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(TwoFoldGraph::from_biadjacency(1, 2, {1, 0}), std::invalid_argument);

  CHECK(tu::tf_two_disjoint().vertex_aut_order() == 2);
  CHECK(tu::tf_edge().vertex_aut_order() == 1);
  CHECK(TwoFoldGraph::from_biadjacency(2, 2, {1, 1, 1, 1}).vertex_aut_order() == 4);

  // Brute-force cross-check of the stabilizer pair count.
  for (int m = 1; m <= 3; ++m) {
    for (const auto& g : enumerate_two_fold(m)) {
      int va = g.a_count(), vb = g.b_count();
      std::vector<int> rows(static_cast<size_t>(va)), cols(static_cast<size_t>(vb));
      std::iota(rows.begin(), rows.end(), 0);
      long long count = 0;
      do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
          bool fixed = true;
          for (int a = 0; a < va && fixed; ++a)
            for (int b = 0; b < vb && fixed; ++b)
              if (g.mult(rows[static_cast<size_t>(a)], cols[static_cast<size_t>(b)]) !=
                  g.mult(a, b))
                fixed = false;
          if (fixed) ++count;
        } while (std::next_permutation(cols.begin(), cols.end()));
      } while (std::next_permutation(rows.begin(), rows.end()));
      CHECK(g.vertex_aut_order() == count);
    }
  }
}

TEST_CASE("two-fold pattern round trip") {
  for (int m = 0; m <= 4; ++m) {
    for (const auto& g : enumerate_two_fold(m)) {
      PatternGraph p = g.to_pattern();
      CHECK(p.is_two_fold_shaped());
      for (int v = 0; v < p.vertex_count(); ++v) {
        bool source = p.out_degree(v) > 0 && p.in_degree(v) == 0;
        bool sink = p.in_degree(v) > 0 && p.out_degree(v) == 0;
        CHECK((source || sink || p.vertex_count() == 0));
      }
      auto back = TwoFoldGraph::from_pattern(p);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  }
  CHECK_FALSE(TwoFoldGraph::from_pattern(tu::loop()).has_value());
  CHECK_FALSE(TwoFoldGraph::from_pattern(tu::two_cycle()).has_value());
}

TEST_CASE("two-fold enumeration counts") {
  CHECK(enumerate_two_fold(0).size() == 1);
  CHECK(enumerate_two_fold(1).size() == 1);

  auto m2 = enumerate_two_fold(2);
  REQUIRE(m2.size() == 4);
  std::set<TwoFoldGraph> expected = {tu::tf_double_edge(), tu::tf_share_a(),
                                     tu::tf_share_b(), tu::tf_two_disjoint()};
  CHECK(std::set<TwoFoldGraph>(m2.begin(), m2.end()) == expected);

  // Stability across runs.
  CHECK(enumerate_two_fold(3) == enumerate_two_fold(3));

  // Independent second enumeration: dedupe labeled bipartite graphs by
  // general pattern-graph canonicalization instead of biadjacency form.
  for (int m = 0; m <= 4; ++m) {
    auto primary = enumerate_two_fold(m);
    std::set<PatternGraph> patterns;
    for (const auto& g : primary) patterns.insert(g.to_pattern());
    CHECK(patterns.size() == primary.size());

    std::set<PatternGraph> independent;
    if (m == 0) {
      independent.insert(PatternGraph());
    } else {
      for (int va = 1; va <= m; ++va)
        for (int vb = 1; vb <= m; ++vb) {
          // every assignment of m labeled edges to cells
          std::vector<int> cell(static_cast<size_t>(m), 0);
          int cells = va * vb;
          while (true) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < m; ++e) {
              int r = cell[static_cast<size_t>(e)] / vb;
              int col = cell[static_cast<size_t>(e)] % vb;
              edges.emplace_back(r, va + col);
            }
            std::vector<bool> touched(static_cast<size_t>(va + vb), false);
            for (auto [u, v] : edges) {
              touched[static_cast<size_t>(u)] = true;
              touched[static_cast<size_t>(v)] = true;
            }
            if (std::all_of(touched.begin(), touched.end(), [](bool t) { return t; }))
              independent.insert(PatternGraph::from_edges(va + vb, edges));
            int i = 0;
            while (i < m && ++cell[static_cast<size_t>(i)] == cells) {
              cell[static_cast<size_t>(i)] = 0;
              ++i;
            }
            if (i == m) break;
          }
        }
    }
    CHECK(independent == patterns);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(777);
  for (int i = 0; i < 20; ++i) {
    PatternGraph g = tu::random_graph(rng, 4);
    CHECK(pattern_graph_from_json(to_json(g)) == g);
  }
  for (int m = 0; m <= 3; ++m)
    for (const auto& g : enumerate_two_fold(m))
      CHECK(two_fold_from_json(to_json(g)) == g);
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_partitions(n))
      CHECK(partition_from_json(to_json(p)) == p);
  CHECK(partition_from_string("2,1") == Partition({2, 1}));
  CHECK(partition_from_string("") == Partition());
  CHECK_THROWS_AS(partition_from_string("2,x"), std::invalid_argument);
}
