#pragma once

#include <hurwitz/partition.hpp>
#include <hurwitz/pattern_graph.hpp>
#include <hurwitz/rational_fn.hpp>
#include <hurwitz/two_fold_graph.hpp>

#include <map>
#include <string>

namespace hurwitz {

/// Summation convention for the vertex values of a pattern graph.
/// Free: sum over all assignments of values in {1..N} to vertices.
/// Exact: sum over assignments injective on vertices.
/// The two bases are related by Mobius inversion on the partition lattice:
///   Free(G)  = sum over vertex partitions pi of Exact(G/pi)
///   Exact(G) = sum over pi of mobius(pi) * Free(G/pi).
enum class Convention { Free, Exact };

std::string convention_name(Convention c);

/// Finite linear combination of pattern-graph classes with coefficients in
/// the field of rational functions of N, under a single fixed summation
/// convention. The zero-edge empty graph is the multiplicative unit.
class OperatorExpr {
 public:
  explicit OperatorExpr(Convention c = Convention::Free) : conv_(c) {}

  static OperatorExpr unit(Convention c);
  static OperatorExpr single(Convention c, const PatternGraph& g, RationalN coeff);

  Convention convention() const { return conv_; }
  const std::map<PatternGraph, RationalN>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Accumulates coeff on the class of g; zero results are erased.
  void add_term(const PatternGraph& g, const RationalN& coeff);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr operator+(const OperatorExpr& o) const;
  OperatorExpr operator-(const OperatorExpr& o) const;
  OperatorExpr scaled(const RationalN& c) const;

  bool operator==(const OperatorExpr& o) const {
    return conv_ == o.conv_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  Convention conv_;
  std::map<PatternGraph, RationalN> terms_;
};

/// Product of two Free-convention expressions by contraction enumeration.
/// For each pair of terms and each partial injective matching M between
/// left edges and right edges: a matched pair (i, j) merges head(i) with
/// tail(j) and splices one new edge tail(i) -> head(j); merged clusters left
/// with no incident edge are summed out and contribute one factor N each.
/// Throws std::invalid_argument unless both factors are Free.
OperatorExpr free_product(const OperatorExpr& x, const OperatorExpr& y);

/// Same product restricted to output terms with exactly m edges (only the
/// matchings of the right size are enumerated).
OperatorExpr free_product_graded(const OperatorExpr& x, const OperatorExpr& y, int m);

/// Exact change of basis between the two conventions; a round trip is the
/// identity.
OperatorExpr convert(const OperatorExpr& x, Convention target);

/// Terms with exactly m edges.
OperatorExpr grade(const OperatorExpr& x, int m);

/// The cut-and-join family element W[d]: the Free class of the disjoint
/// cycle graph of d. W[[]] is the unit.
OperatorExpr w_op(const Partition& d);

/// W built from an explicit permutation's index pattern (edge i -> sigma(i));
/// equal to w_op(cycle_type(sigma)) by class invariance.
OperatorExpr w_op_from_permutation(const Permutation& sigma);

/// The two-fold family element V(g): N^{-|V_b|} times the sum, over partial
/// matchings mu between a-vertices and b-vertices, of the Exact class of
/// g/mu. Cross-side value coincidences are free; within-side values stay
/// distinct. V of the empty graph is the unit.
OperatorExpr v_op(const TwoFoldGraph& g);

struct WExpansion {
  std::map<Partition, RationalN> coeffs;
  OperatorExpr residual{Convention::Exact};
};

struct VExpansion {
  std::map<TwoFoldGraph, RationalN> coeffs;
  OperatorExpr residual{Convention::Exact};
};

/// Deterministic triangular elimination in the Exact basis, in order of
/// decreasing vertex count (ties by canonical form): each family element has
/// its own graph as unique vertex-maximal Exact term. Non-family terms are
/// reported unchanged in the residual.
WExpansion expand_in_w(const OperatorExpr& x);
VExpansion expand_in_v(const OperatorExpr& x);

}  // namespace hurwitz
