#pragma once

#include <hurwitz/numeric.hpp>
#include <hurwitz/partition.hpp>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// Isomorphism class of a finite directed multigraph with no isolated
/// vertices, stored in canonical form together with the order of its
/// vertex-permutation automorphism group.
///
/// A graph encodes the index-coincidence pattern of a balanced operator
/// monomial family: each vertex is an index value, and an edge u -> v stands
/// for one factor X_{A(u),e} d/dX_{A(v),e} (the tail carries the variable,
/// the head carries the derivative, and the two share one summed e-index).
/// The empty graph (zero vertices) is the unique zero-edge class and acts as
/// the multiplicative unit.
class PatternGraph {
 public:
  PatternGraph() = default;  // empty graph

  /// Builds the class of the given labeled multigraph. Rejects isolated
  /// vertices (std::invalid_argument).
  static PatternGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static PatternGraph from_matrix(int n, const std::vector<int>& mult);

  /// Disjoint union of directed cycles, one cycle of length k per part k.
  /// Parts equal to 1 become loop vertices.
  static PatternGraph cycle_graph(const Partition& d);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }
  bool is_empty() const { return n_ == 0; }

  /// Canonical multiplicity matrix, row-major n x n.
  const std::vector<int>& matrix() const { return mult_; }
  int mult(int u, int v) const { return mult_[static_cast<size_t>(u) * n_ + v]; }

  /// Order of the vertex-permutation stabilizer of the matrix.
  long long aut_order() const { return aut_; }
  /// aut_order() times the product of mult! over all parallel-edge families.
  BigInt aut_order_with_edge_factor() const;

  /// Edge list (tail, head) expanded by multiplicity, (u, v)-lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  int out_degree(int v) const;
  int in_degree(int v) const;

  /// Merge vertices per the given partition of {0..n-1}; edge multiplicities
  /// add up and internal edges become loops. Result is canonical.
  PatternGraph quotient(const SetPartition& sp) const;

  /// Disjoint union with another class.
  PatternGraph disjoint_union(const PatternGraph& o) const;

  /// True when every vertex has exactly one outgoing and one incoming edge,
  /// i.e. the graph is a disjoint union of simple directed cycles.
  bool is_cycle_union() const;
  /// Cycle lengths as a partition; requires is_cycle_union().
  Partition cycle_type() const;

  /// True when every vertex is a pure source or a pure sink.
  bool is_two_fold_shaped() const;

  auto operator<=>(const PatternGraph& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return mult_ <=> o.mult_;
  }
  bool operator==(const PatternGraph& o) const {
    return n_ == o.n_ && mult_ == o.mult_;
  }

  std::string str() const;

 private:
  static PatternGraph canonicalize(int n, const std::vector<int>& mult);

  int n_ = 0;
  std::vector<int> mult_;  // row-major, canonical
  int edges_ = 0;
  long long aut_ = 1;
};

/// Brute-force stabilizer count over all n! vertex permutations. Test
/// oracle; feasible for n <= 8.
long long brute_force_aut_order(int n, const std::vector<int>& mult);

}  // namespace hurwitz
