#pragma once

#include <hurwitz/operator_expr.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// A structural expectation failed: a product left the W span, or a
/// supposedly N-free coefficient depends on N, or a graded limit diverges.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expansion of W[d1] * W[d2] back over the W family. Every coefficient is
/// constant in N and the residual vanishes identically; both facts are
/// checked and a ClosureError is thrown otherwise.
struct WStructureTable {
  Partition left, right;
  std::map<Partition, RationalN> entries;
};

WStructureTable a_structure_constants(const Partition& d1, const Partition& d2);

/// Expansion of V(g1) * V(g2) over the V family, with the part of the
/// product that is not a combination of V elements reported exactly as an
/// Exact-convention residual (never an error).
struct VStructureTable {
  TwoFoldGraph left, right;
  std::map<TwoFoldGraph, RationalN> entries;
  OperatorExpr residual{Convention::Exact};
};

VStructureTable b_structure_constants(const TwoFoldGraph& g1, const TwoFoldGraph& g2);

/// Same expansion restricted to output terms with exactly m edges. Much
/// cheaper than the full table: only full contractions of the right size are
/// enumerated and converted.
VStructureTable b_structure_constants_graded(const TwoFoldGraph& g1,
                                             const TwoFoldGraph& g2, int m);

/// N -> infinity limits of the grade-m structure constants, for inputs with
/// m edges each. Entries whose limit is exactly zero are omitted. Throws
/// ClosureError when a grade-m coefficient diverges.
std::map<TwoFoldGraph, Rational> b_limit_constants(const TwoFoldGraph& g1,
                                                   const TwoFoldGraph& g2, int m);

/// Candidate weightings for the combinatorial gluing product; the shipped
/// product uses kGlueWeighting, fixed by exhaustive calibration against
/// b_limit_constants at m <= 2 (see tests).
enum class GlueWeighting {
  RawCount,       // number of gluing configurations per output class
  VertexAut,      // raw count / vertex-level |Aut| of the output class
  VertexEdgeAut,  // raw count / (vertex |Aut| * product of parallel-edge factorials)
};

inline constexpr GlueWeighting kGlueWeighting = GlueWeighting::RawCount;

/// Gluing product on two-fold classes: identify the b-vertices of g1 with
/// the a-vertices of g2 through a valence-preserving bijection, pair up the
/// attached edges at every identified vertex, and concatenate each pair into
/// one edge from a source of g1 to a sink of g2. Returns the zero map when
/// the valence multisets do not match.
std::map<TwoFoldGraph, Rational> glue_product(const TwoFoldGraph& g1,
                                              const TwoFoldGraph& g2);
std::map<TwoFoldGraph, Rational> glue_product_with(const TwoFoldGraph& g1,
                                                   const TwoFoldGraph& g2,
                                                   GlueWeighting weighting);

struct TheoremPairResult {
  TwoFoldGraph g1, g2;
  bool limits_finite = true;
  bool pass = false;
  std::map<TwoFoldGraph, Rational> limits;
  std::map<TwoFoldGraph, Rational> glue;
  size_t graded_residual_terms = 0;
  std::optional<size_t> full_residual_terms;  // populated when cheap enough
};

struct TheoremReport {
  int m = 0;
  bool all_pass = false;
  std::vector<TheoremPairResult> pairs;
};

/// For every ordered pair of m-edge classes, compares the N -> infinity
/// limit table with the gluing product, entrywise and exactly. Failures are
/// report content, not errors. Full residual sizes are included when
/// include_full_residuals is set (cheap for m <= 2).
TheoremReport verify_theorem(int m, bool include_full_residuals);
TheoremReport verify_theorem(int m);

struct ClassAlgebraReport {
  int m = 0;
  /// Center-of-group-algebra structure constants from the brute-force
  /// oracle: (d1, d2) -> d3 -> nonnegative integer.
  std::map<std::pair<Partition, Partition>, std::map<Partition, BigInt>> sm_table;
  /// Grade-preserving sector of the W products for the same labels.
  std::map<std::pair<Partition, Partition>, std::map<Partition, RationalN>> w_table;
  /// Best-fit diagonal change of basis lambda: C_d ~ lambda_d * W[d],
  /// found by triangular matching; empty when no consistent scaling exists.
  std::map<Partition, Rational> lambda;
  bool scaling_found = false;
  bool consistent = false;
  std::vector<std::string> discrepancies;
};

/// Side-by-side comparison of the two algebras at size m. A report, not an
/// assertion: discrepancies are listed, never suppressed.
ClassAlgebraReport compare_class_algebra(int m);

}  // namespace hurwitz
