#include <hurwitz/algebras.hpp>
#include <hurwitz/oracles.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hurwitz {

WStructureTable a_structure_constants(const Partition& d1, const Partition& d2) {
  WExpansion e = expand_in_w(free_product(w_op(d1), w_op(d2)));
  if (!e.residual.is_zero())
    throw ClosureError("a_structure_constants: product of W[" + d1.str() + "], W[" +
                       d2.str() + "] left the W span: " + e.residual.str());
  for (const auto& [label, c] : e.coeffs)
    if (!c.is_constant())
      throw ClosureError("a_structure_constants: coefficient of W[" + label.str() +
                         "] depends on N: " + c.str());
  WStructureTable t;
  t.left = d1;
  t.right = d2;
  t.entries = std::move(e.coeffs);
  return t;
}

namespace {

OperatorExpr v_op_free(const TwoFoldGraph& g) {
  return convert(v_op(g), Convention::Free);
}

}  // namespace

VStructureTable b_structure_constants(const TwoFoldGraph& g1, const TwoFoldGraph& g2) {
  VExpansion e = expand_in_v(free_product(v_op_free(g1), v_op_free(g2)));
  VStructureTable t;
  t.left = g1;
  t.right = g2;
  t.entries = std::move(e.coeffs);
  t.residual = std::move(e.residual);
  return t;
}

VStructureTable b_structure_constants_graded(const TwoFoldGraph& g1,
                                             const TwoFoldGraph& g2, int m) {
  VExpansion e = expand_in_v(free_product_graded(v_op_free(g1), v_op_free(g2), m));
  VStructureTable t;
  t.left = g1;
  t.right = g2;
  t.entries = std::move(e.coeffs);
  t.residual = std::move(e.residual);
  return t;
}

namespace {

// Limits of the grade-m entries; false when one diverges.
bool graded_limits(const VStructureTable& graded, int m,
                   std::map<TwoFoldGraph, Rational>& out) {
  for (const auto& [label, c] : graded.entries) {
    if (label.edge_count() != m) continue;
    LimitResult lim = c.limit_at_infinity();
    if (!lim.finite) return false;
    if (lim.value != 0) out.emplace(label, lim.value);
  }
  return true;
}

}  // namespace

std::map<TwoFoldGraph, Rational> b_limit_constants(const TwoFoldGraph& g1,
                                                   const TwoFoldGraph& g2, int m) {
  if (g1.edge_count() != m || g2.edge_count() != m)
    throw std::invalid_argument("b_limit_constants: inputs must have m edges each");
  std::map<TwoFoldGraph, Rational> out;
  if (!graded_limits(b_structure_constants_graded(g1, g2, m), m, out))
    throw ClosureError("b_limit_constants: a grade-" + std::to_string(m) +
                       " coefficient diverges as N -> infinity");
  return out;
}

namespace {

// Enumerates every gluing configuration (valence-preserving vertex
// bijection plus per-vertex edge bijections) and counts, per canonical
// output class, the configurations producing it.
std::map<TwoFoldGraph, long long> glue_raw_counts(const TwoFoldGraph& g1,
                                                  const TwoFoldGraph& g2) {
  std::map<TwoFoldGraph, long long> counts;
  if (g1.is_empty() && g2.is_empty()) {
    counts[TwoFoldGraph()] = 1;
    return counts;
  }
  std::vector<int> bval = g1.b_valences();
  std::vector<int> aval = g2.a_valences();
  {
    std::vector<int> x = bval, y = aval;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return counts;  // no valence-preserving identification
  }

  int vb1 = g1.b_count(), va1 = g1.a_count(), vb2 = g2.b_count();
  // Left edge slots at b-vertex w: sources repeated by multiplicity.
  std::vector<std::vector<int>> left_slots(static_cast<size_t>(vb1));
  for (int w = 0; w < vb1; ++w)
    for (int s = 0; s < va1; ++s)
      for (int t = 0; t < g1.mult(s, w); ++t)
        left_slots[static_cast<size_t>(w)].push_back(s);
  std::vector<std::vector<int>> right_slots(static_cast<size_t>(g2.a_count()));
  for (int u = 0; u < g2.a_count(); ++u)
    for (int t = 0; t < vb2; ++t)
      for (int k = 0; k < g2.mult(u, t); ++k)
        right_slots[static_cast<size_t>(u)].push_back(t);

  std::vector<int> beta(static_cast<size_t>(vb1), -1);
  std::vector<bool> used(static_cast<size_t>(g2.a_count()), false);

  std::function<void(int)> glue_edges;
  std::vector<std::vector<int>> edge_perm(static_cast<size_t>(vb1));

  auto emit = [&]() {
    std::vector<int> glued(static_cast<size_t>(va1) * vb2, 0);
    for (int w = 0; w < vb1; ++w) {
      const auto& ls = left_slots[static_cast<size_t>(w)];
      const auto& rs = right_slots[static_cast<size_t>(beta[static_cast<size_t>(w)])];
      const auto& perm = edge_perm[static_cast<size_t>(w)];
      for (size_t p = 0; p < ls.size(); ++p)
        ++glued[static_cast<size_t>(ls[p]) * vb2 + rs[static_cast<size_t>(perm[p])]];
    }
    ++counts[TwoFoldGraph::from_biadjacency(va1, vb2, glued)];
  };

  glue_edges = [&](int w) {
    if (w == vb1) {
      emit();
      return;
    }
    auto& perm = edge_perm[static_cast<size_t>(w)];
    perm.resize(left_slots[static_cast<size_t>(w)].size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      glue_edges(w + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  std::function<void(int)> assign = [&](int w) {
    if (w == vb1) {
      glue_edges(0);
      return;
    }
    for (int u = 0; u < g2.a_count(); ++u) {
      if (used[static_cast<size_t>(u)] ||
          aval[static_cast<size_t>(u)] != bval[static_cast<size_t>(w)])
        continue;
      used[static_cast<size_t>(u)] = true;
      beta[static_cast<size_t>(w)] = u;
      assign(w + 1);
      used[static_cast<size_t>(u)] = false;
    }
  };
  assign(0);
  return counts;
}

}  // namespace

std::map<TwoFoldGraph, Rational> glue_product_with(const TwoFoldGraph& g1,
                                                   const TwoFoldGraph& g2,
                                                   GlueWeighting weighting) {
  std::map<TwoFoldGraph, Rational> out;
  for (const auto& [cls, raw] : glue_raw_counts(g1, g2)) {
    Rational w(raw);
    if (weighting != GlueWeighting::RawCount) {
      BigInt denom = cls.vertex_aut_order();
      if (weighting == GlueWeighting::VertexEdgeAut)
        for (int x : cls.biadjacency()) denom *= factorial(x);
      w /= Rational(denom);
    }
    if (w != 0) out.emplace(cls, w);
  }
  return out;
}

std::map<TwoFoldGraph, Rational> glue_product(const TwoFoldGraph& g1,
                                              const TwoFoldGraph& g2) {
  return glue_product_with(g1, g2, kGlueWeighting);
}

TheoremReport verify_theorem(int m, bool include_full_residuals) {
  TheoremReport report;
  report.m = m;
  report.all_pass = true;
  std::vector<TwoFoldGraph> classes = enumerate_two_fold(m);
  for (const auto& g1 : classes) {
    for (const auto& g2 : classes) {
      TheoremPairResult r;
      r.g1 = g1;
      r.g2 = g2;
      VStructureTable graded = b_structure_constants_graded(g1, g2, m);
      r.graded_residual_terms = graded.residual.term_count();
      r.limits_finite = graded_limits(graded, m, r.limits);
      r.glue = glue_product(g1, g2);
      r.pass = r.limits_finite && r.limits == r.glue;
      if (include_full_residuals)
        r.full_residual_terms = b_structure_constants(g1, g2).residual.term_count();
      report.all_pass = report.all_pass && r.pass;
      report.pairs.push_back(std::move(r));
    }
  }
  return report;
}

TheoremReport verify_theorem(int m) { return verify_theorem(m, m <= 2); }

namespace {

// Exact square root of a nonnegative rational; nullopt when not a perfect
// square.
std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  BigInt n = numerator(x), d = denominator(x);
  BigInt sn = boost::multiprecision::sqrt(n);
  BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace

ClassAlgebraReport compare_class_algebra(int m) {
  if (m < 0 || m > 6)
    throw std::invalid_argument("compare_class_algebra: m out of range (0..6)");
  ClassAlgebraReport rep;
  rep.m = m;
  std::vector<Partition> labels = enumerate_partitions(m);

  for (const auto& d1 : labels) {
    for (const auto& d2 : labels) {
      auto oracle = sym_class_constants(m, d1, d2);
      std::map<Partition, BigInt> z;
      for (const auto& [d3, c] : oracle)
        if (c != 0) z.emplace(d3, BigInt(c));
      rep.sm_table.emplace(std::make_pair(d1, d2), std::move(z));

      WExpansion e = expand_in_w(free_product_graded(w_op(d1), w_op(d2), m));
      rep.w_table.emplace(std::make_pair(d1, d2), std::move(e.coeffs));
    }
  }

  // Triangular matching of a diagonal scaling lambda: the unit label is
  // pinned by the (unit, unit) -> unit entry, every other lambda by the
  // (d, d) -> unit entry, which is an exact square.
  Partition unit(std::vector<int>(static_cast<size_t>(m), 1));
  // Constant value of a W-table entry; 0 when absent, nullopt when the
  // entry is not constant in N.
  auto w_entry = [&](const Partition& a, const Partition& b,
                     const Partition& c) -> std::optional<Rational> {
    auto it = rep.w_table.find(std::make_pair(a, b));
    if (it == rep.w_table.end()) return Rational(0);
    auto jt = it->second.find(c);
    if (jt == it->second.end()) return Rational(0);
    if (!jt->second.is_constant()) return std::nullopt;
    return jt->second.constant_value();
  };
  auto z_entry = [&](const Partition& a, const Partition& b,
                     const Partition& c) -> Rational {
    auto it = rep.sm_table.find(std::make_pair(a, b));
    if (it == rep.sm_table.end()) return 0;
    auto jt = it->second.find(c);
    return jt == it->second.end() ? Rational(0) : Rational(jt->second);
  };

  rep.scaling_found = true;
  std::optional<Rational> t_unit = w_entry(unit, unit, unit);
  if (!t_unit || *t_unit == 0) {
    rep.scaling_found = false;
  } else {
    rep.lambda[unit] = z_entry(unit, unit, unit) / *t_unit;
    for (const auto& d : labels) {
      if (d == unit) continue;
      std::optional<Rational> t = w_entry(d, d, unit);
      Rational z = z_entry(d, d, unit);
      if (!t || *t == 0) {
        rep.scaling_found = false;
        break;
      }
      auto l = rational_sqrt(z * rep.lambda[unit] / *t);
      if (!l) {
        rep.scaling_found = false;
        break;
      }
      rep.lambda[d] = *l;
    }
  }
  if (!rep.scaling_found) rep.lambda.clear();

  rep.consistent = rep.scaling_found;
  for (const auto& d1 : labels) {
    for (const auto& d2 : labels) {
      const auto& w_row = rep.w_table.at(std::make_pair(d1, d2));
      const auto& z_row = rep.sm_table.at(std::make_pair(d1, d2));
      std::vector<Partition> outs;
      for (const auto& [d3, c] : w_row) outs.push_back(d3);
      for (const auto& [d3, c] : z_row)
        if (!w_row.count(d3)) outs.push_back(d3);
      for (const auto& d3 : outs) {
        std::optional<Rational> t = w_entry(d1, d2, d3);
        Rational z = z_entry(d1, d2, d3);
        if (!t) {
          rep.consistent = false;
          rep.discrepancies.push_back("non-constant W coefficient at (" + d1.str() +
                                      "," + d2.str() + ") -> " + d3.str());
          continue;
        }
        if (!rep.scaling_found) continue;
        Rational scaled =
            rep.lambda.at(d1) * rep.lambda.at(d2) / rep.lambda.at(d3) * *t;
        if (scaled != z) {
          rep.consistent = false;
          std::ostringstream msg;
          msg << "(" << d1.str() << "," << d2.str() << ") -> " << d3.str()
              << ": scaled W constant " << rational_str(scaled)
              << " != class constant " << rational_str(z);
          rep.discrepancies.push_back(msg.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace hurwitz
