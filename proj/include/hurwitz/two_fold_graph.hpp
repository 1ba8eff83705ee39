#pragma once

#include <hurwitz/pattern_graph.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// Isomorphism class of a bipartite multigraph: a-vertices carry only
/// outgoing edges, b-vertices only incoming ones, and no vertex is
/// isolated. Stored as the biadjacency matrix that is lexicographically
/// minimal over independent row and column permutations.
class TwoFoldGraph {
 public:
  TwoFoldGraph() = default;  // empty graph (the unit class)

  /// adj is row-major va x vb. Rejects negative entries and isolated
  /// vertices (zero rows or columns).
  static TwoFoldGraph from_biadjacency(int va, int vb, const std::vector<int>& adj);

  /// Recognizes a two-fold-shaped pattern graph (every vertex a pure source
  /// or pure sink); returns nullopt otherwise.
  static std::optional<TwoFoldGraph> from_pattern(const PatternGraph& g);

  /// The same class as a general pattern graph: sources first, then sinks.
  PatternGraph to_pattern() const;

  int a_count() const { return va_; }
  int b_count() const { return vb_; }
  int edge_count() const { return edges_; }
  bool is_empty() const { return va_ == 0 && vb_ == 0; }

  const std::vector<int>& biadjacency() const { return adj_; }
  int mult(int a, int b) const { return adj_[static_cast<size_t>(a) * vb_ + b]; }

  /// Number of (row permutation, column permutation) pairs fixing the
  /// biadjacency matrix.
  long long vertex_aut_order() const { return aut_; }

  std::vector<int> a_valences() const;  // row sums
  std::vector<int> b_valences() const;  // column sums

  auto operator<=>(const TwoFoldGraph& o) const {
    if (auto c = va_ <=> o.va_; c != 0) return c;
    if (auto c = vb_ <=> o.vb_; c != 0) return c;
    return adj_ <=> o.adj_;
  }
  bool operator==(const TwoFoldGraph& o) const {
    return va_ == o.va_ && vb_ == o.vb_ && adj_ == o.adj_;
  }

  std::string str() const;

 private:
  int va_ = 0, vb_ = 0;
  std::vector<int> adj_;  // canonical, row-major va x vb
  int edges_ = 0;
  long long aut_ = 1;
};

/// All two-fold classes with exactly m edges, in canonical order.
std::vector<TwoFoldGraph> enumerate_two_fold(int m);

}  // namespace hurwitz
