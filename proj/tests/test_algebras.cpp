#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hurwitz/algebras.hpp>
#include <hurwitz/json_io.hpp>

#include "test_util.hpp"

#include <random>

using namespace hurwitz;
namespace tu = hurwitz::testutil;

namespace {

std::vector<Partition> diagrams_up_to(int boxes) {
  std::vector<Partition> out;
  for (int n = 0; n <= boxes; ++n)
    for (const auto& d : enumerate_partitions(n)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("A structure constants: small cases") {
  WStructureTable t = a_structure_constants(Partition({1}), Partition({1}));
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries.at(Partition({1, 1})) == RationalN(1));
  CHECK(t.entries.at(Partition({1})) == RationalN(1));

  WStructureTable u = a_structure_constants(Partition({2}), Partition({1}));
  REQUIRE(u.entries.size() == 2);
  CHECK(u.entries.at(Partition({2, 1})) == RationalN(1));
  CHECK(u.entries.at(Partition({2})) == RationalN(2));

  for (const auto& [label, c] : a_structure_constants(Partition({2}), Partition({2})).entries)
    CHECK(c.is_constant());

  // Unit behaves as unit.
  WStructureTable e = a_structure_constants(Partition(), Partition({3, 1}));
  REQUIRE(e.entries.size() == 1);
  CHECK(e.entries.at(Partition({3, 1})) == RationalN(1));
}

TEST_CASE("A is commutative and N-independent for diagrams up to 4 boxes") {
  auto labels = diagrams_up_to(4);
  for (const auto& d1 : labels) {
    for (const auto& d2 : labels) {
      WStructureTable t12 = a_structure_constants(d1, d2);
      WStructureTable t21 = a_structure_constants(d2, d1);
      CHECK(t12.entries == t21.entries);
      for (const auto& [label, c] : t12.entries) CHECK(c.is_constant());
    }
  }
}

TEST_CASE("A is associative for diagrams up to 3 boxes") {
  auto labels = diagrams_up_to(3);
  for (const auto& a : labels)
    for (const auto& b : labels)
      for (const auto& c : labels) {
        OperatorExpr left = free_product(free_product(w_op(a), w_op(b)), w_op(c));
        OperatorExpr right = free_product(w_op(a), free_product(w_op(b), w_op(c)));
        CHECK(left == right);
      }
}

TEST_CASE("B structure constants for the single edge") {
  VStructureTable t = b_structure_constants(tu::tf_edge(), tu::tf_edge());
  CHECK(t.residual.is_zero());
  CHECK(t.entries.at(tu::tf_edge()) == RationalN(1));  // exactly 1 for all N

  // unit * g = g
  VStructureTable u = b_structure_constants(TwoFoldGraph(), tu::tf_double_edge());
  CHECK(u.residual.is_zero());
  REQUIRE(u.entries.size() == 1);
  CHECK(u.entries.at(tu::tf_double_edge()) == RationalN(1));
}

TEST_CASE("graded B table matches the graded part of the full table") {
  auto classes = enumerate_two_fold(2);
  for (const auto& g1 : classes)
    for (const auto& g2 : classes) {
      VStructureTable full = b_structure_constants(g1, g2);
      VStructureTable graded = b_structure_constants_graded(g1, g2, 2);
      std::map<TwoFoldGraph, RationalN> expect;
      for (const auto& [label, c] : full.entries)
        if (label.edge_count() == 2) expect.emplace(label, c);
      CHECK(graded.entries == expect);
      CHECK(graded.residual == grade(full.residual, 2));
    }
}

TEST_CASE("B limit constants") {
  auto lim = b_limit_constants(tu::tf_edge(), tu::tf_edge(), 1);
  REQUIRE(lim.size() == 1);
  CHECK(lim.at(tu::tf_edge()) == 1);

  // All grade-2 limits exist for every ordered pair.
  auto classes = enumerate_two_fold(2);
  for (const auto& g1 : classes)
    for (const auto& g2 : classes) CHECK_NOTHROW(b_limit_constants(g1, g2, 2));

  // Valence-incompatible pair: empty limit map, empty glue map.
  auto l = b_limit_constants(tu::tf_double_edge(), tu::tf_two_disjoint(), 2);
  CHECK(l.empty());
  CHECK(glue_product(tu::tf_double_edge(), tu::tf_two_disjoint()).empty());

  CHECK_THROWS_AS(b_limit_constants(tu::tf_edge(), tu::tf_double_edge(), 2),
                  std::invalid_argument);
}

TEST_CASE("gluing product examples") {
  auto ee = glue_product(tu::tf_edge(), tu::tf_edge());
  REQUIRE(ee.size() == 1);
  CHECK(ee.at(tu::tf_edge()) == 1);

  CHECK(glue_product(tu::tf_double_edge(), tu::tf_two_disjoint()).empty());

  auto dd = glue_product(tu::tf_double_edge(), tu::tf_double_edge());
  REQUIRE(dd.size() == 1);
  CHECK(dd.at(tu::tf_double_edge()) == 2);  // two edge pairings, one class

  // Unit gluing.
  auto uu = glue_product(TwoFoldGraph(), TwoFoldGraph());
  REQUIRE(uu.size() == 1);
  CHECK(uu.at(TwoFoldGraph()) == 1);
}

TEST_CASE("gluing weight calibration: raw count is the unique match at m <= 2") {
  bool candidate_ok[3] = {true, true, true};
  GlueWeighting candidates[3] = {GlueWeighting::RawCount, GlueWeighting::VertexAut,
                                 GlueWeighting::VertexEdgeAut};
  for (int m = 0; m <= 2; ++m) {
    auto classes = enumerate_two_fold(m);
    for (const auto& g1 : classes) {
      for (const auto& g2 : classes) {
        auto limits = b_limit_constants(g1, g2, m);
        for (int k = 0; k < 3; ++k)
          if (glue_product_with(g1, g2, candidates[k]) != limits)
            candidate_ok[k] = false;
      }
    }
  }
  CHECK(candidate_ok[0]);        // raw configuration count
  CHECK_FALSE(candidate_ok[1]);  // dividing by vertex |Aut| over-corrects
  CHECK_FALSE(candidate_ok[2]);  // dividing by edge factorials too
  CHECK(kGlueWeighting == GlueWeighting::RawCount);
}

TEST_CASE("theorem verification") {
  TheoremReport r0 = verify_theorem(0);
  CHECK(r0.all_pass);
  CHECK(r0.pairs.size() == 1);

  TheoremReport r1 = verify_theorem(1);
  CHECK(r1.all_pass);
  CHECK(r1.pairs.size() == 1);
  CHECK(r1.pairs.front().full_residual_terms.has_value());
  CHECK(*r1.pairs.front().full_residual_terms == 0);

  TheoremReport r2 = verify_theorem(2);
  CHECK(r2.all_pass);
  CHECK(r2.pairs.size() == 16);
}

TEST_CASE("theorem spot checks at m = 3") {
  auto classes = enumerate_two_fold(3);
  REQUIRE(classes.size() == 10);
  std::mt19937 rng(13);
  std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const TwoFoldGraph& g1 = classes[pick(rng)];
    const TwoFoldGraph& g2 = classes[pick(rng)];
    CHECK(b_limit_constants(g1, g2, 3) == glue_product(g1, g2));
  }
}

TEST_CASE("the limit tables define an associative product per grade") {
  for (int m = 0; m <= 2; ++m) {
    auto classes = enumerate_two_fold(m);
    std::map<std::pair<TwoFoldGraph, TwoFoldGraph>, std::map<TwoFoldGraph, Rational>> table;
    for (const auto& a : classes)
      for (const auto& b : classes)
        table.emplace(std::make_pair(a, b), b_limit_constants(a, b, m));
    for (const auto& a : classes)
      for (const auto& b : classes)
        for (const auto& c : classes) {
          std::map<TwoFoldGraph, Rational> lhs, rhs;
          for (const auto& [g, w] : table.at(std::make_pair(a, b)))
            for (const auto& [h, u] : table.at(std::make_pair(g, c))) lhs[h] += w * u;
          for (const auto& [g, w] : table.at(std::make_pair(b, c)))
            for (const auto& [h, u] : table.at(std::make_pair(a, g))) rhs[h] += w * u;
          std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
          std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("class algebra comparison") {
  ClassAlgebraReport r1 = compare_class_algebra(1);
  CHECK(r1.scaling_found);
  CHECK(r1.consistent);
  CHECK(r1.discrepancies.empty());

  ClassAlgebraReport r2 = compare_class_algebra(2);
  CHECK(r2.consistent);
  auto key = std::make_pair(Partition({2}), Partition({2}));
  REQUIRE(r2.sm_table.count(key) == 1);
  CHECK(r2.sm_table.at(key).at(Partition({1, 1})) == 1);
  CHECK(r2.sm_table.at(key).size() == 1);

  ClassAlgebraReport r3 = compare_class_algebra(3);
  CHECK(r3.consistent);
  CHECK(r3.sm_table.size() == 9);  // 3 partitions of 3, ordered pairs
  CHECK(r3.w_table.size() == 9);
  // lambda matches |C_d| / m!.
  CHECK(r3.lambda.at(Partition({1, 1, 1})) == Rational(1, 6));
  CHECK(r3.lambda.at(Partition({2, 1})) == Rational(1, 2));
  CHECK(r3.lambda.at(Partition({3})) == Rational(1, 3));

  CHECK_THROWS_AS(compare_class_algebra(7), std::invalid_argument);
}

TEST_CASE("class algebra comparison stays consistent up to the m = 6 bound") {
  for (int m = 4; m <= 6; ++m) {
    ClassAlgebraReport r = compare_class_algebra(m);
    CHECK(r.scaling_found);
    CHECK(r.consistent);
    CHECK(r.discrepancies.empty());
    // The fitted scaling is |C_d| / m! for every label.
    std::map<Partition, long long> sizes;
    for (const auto& p : symmetric_group(m)) ++sizes[cycle_type(p)];
    for (const auto& [d, l] : r.lambda)
      CHECK(l == Rational(sizes.at(d), factorial(m)));
  }
}

TEST_CASE("report JSON is deterministic") {
  std::string a = to_json(verify_theorem(1)).dump();
  std::string b = to_json(verify_theorem(1)).dump();
  CHECK(a == b);
  std::string c = to_json(compare_class_algebra(2)).dump();
  std::string d = to_json(compare_class_algebra(2)).dump();
  CHECK(c == d);
}
