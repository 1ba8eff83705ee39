#include <hurwitz/operator_expr.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

std::string convention_name(Convention c) {
  return c == Convention::Free ? "free" : "exact";
}

OperatorExpr OperatorExpr::unit(Convention c) {
  OperatorExpr e(c);
  e.add_term(PatternGraph(), RationalN(1));
  return e;
}

OperatorExpr OperatorExpr::single(Convention c, const PatternGraph& g, RationalN coeff) {
  OperatorExpr e(c);
  e.add_term(g, coeff);
  return e;
}

void OperatorExpr::add_term(const PatternGraph& g, const RationalN& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  if (conv_ != o.conv_)
    throw std::invalid_argument("OperatorExpr: convention mismatch");
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  if (conv_ != o.conv_)
    throw std::invalid_argument("OperatorExpr: convention mismatch");
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
  OperatorExpr r = *this;
  r += o;
  return r;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const {
  OperatorExpr r = *this;
  r -= o;
  return r;
}

OperatorExpr OperatorExpr::scaled(const RationalN& c) const {
  OperatorExpr r(conv_);
  if (c.is_zero()) return r;
  for (const auto& [g, k] : terms_) r.terms_.emplace(g, k * c);
  return r;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  out << convention_name(conv_) << "{";
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*" << g.str();
  }
  out << "}";
  return out.str();
}

namespace {

// ---------------------------------------------------------------------------
// Splice machinery for the free product.

struct SpliceResult {
  PatternGraph graph;
  int free_clusters = 0;  // merged clusters with no surviving edge
};

int uf_find(std::vector<int>& p, int x) {
  while (p[static_cast<size_t>(x)] != x) {
    p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    x = p[static_cast<size_t>(x)];
  }
  return x;
}

// matching[i] = right edge index matched with left edge i, or -1.
SpliceResult splice(const PatternGraph& g1, const PatternGraph& g2,
                    const std::vector<std::pair<int, int>>& e1,
                    const std::vector<std::pair<int, int>>& e2,
                    const std::vector<int>& matching) {
  int n1 = g1.vertex_count();
  int n = n1 + g2.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t i = 0; i < matching.size(); ++i) {
    int j = matching[i];
    if (j < 0) continue;
    int a = uf_find(parent, e1[i].second);            // head of left edge
    int b = uf_find(parent, n1 + e2[static_cast<size_t>(j)].first);  // tail of right edge
    parent[static_cast<size_t>(a)] = b;
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<bool> right_used(e2.size(), false);
  for (size_t i = 0; i < matching.size(); ++i) {
    int j = matching[i];
    if (j < 0) {
      edges.emplace_back(uf_find(parent, e1[i].first), uf_find(parent, e1[i].second));
    } else {
      right_used[static_cast<size_t>(j)] = true;
      edges.emplace_back(uf_find(parent, e1[i].first),
                         uf_find(parent, n1 + e2[static_cast<size_t>(j)].second));
    }
  }
  for (size_t j = 0; j < e2.size(); ++j)
    if (!right_used[j])
      edges.emplace_back(uf_find(parent, n1 + e2[j].first),
                         uf_find(parent, n1 + e2[j].second));

  std::vector<bool> live(static_cast<size_t>(n), false);
  for (auto [u, v] : edges) {
    live[static_cast<size_t>(u)] = true;
    live[static_cast<size_t>(v)] = true;
  }
  std::vector<int> compact(static_cast<size_t>(n), -1);
  int kept = 0, dropped = 0;
  for (int v = 0; v < n; ++v) {
    if (uf_find(parent, v) != v) continue;  // not a cluster representative
    if (live[static_cast<size_t>(v)])
      compact[static_cast<size_t>(v)] = kept++;
    else
      ++dropped;
  }

  SpliceResult r;
  r.free_clusters = dropped;
  std::vector<std::pair<int, int>> remapped;
  remapped.reserve(edges.size());
  for (auto [u, v] : edges)
    remapped.emplace_back(compact[static_cast<size_t>(u)], compact[static_cast<size_t>(v)]);
  r.graph = PatternGraph::from_edges(kept, remapped);
  return r;
}

// Enumerates partial injective matchings between left edges and right edges,
// optionally restricted to a fixed matching size.
void for_each_matching(int m1, int m2, int required_size,
                       const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> matching(static_cast<size_t>(m1), -1);
  std::vector<bool> used(static_cast<size_t>(m2), false);
  std::function<void(int, int)> rec = [&](int i, int matched) {
    if (i == m1) {
      if (required_size < 0 || matched == required_size) visit(matching);
      return;
    }
    if (required_size >= 0) {
      int remaining = m1 - i;
      if (matched + remaining < required_size) return;  // cannot reach the target
      if (matched > required_size) return;
    }
    matching[static_cast<size_t>(i)] = -1;
    rec(i + 1, matched);
    for (int j = 0; j < m2; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = true;
      matching[static_cast<size_t>(i)] = j;
      rec(i + 1, matched + 1);
      matching[static_cast<size_t>(i)] = -1;
      used[static_cast<size_t>(j)] = false;
    }
  };
  rec(0, 0);
}

OperatorExpr free_product_impl(const OperatorExpr& x, const OperatorExpr& y,
                               int target_grade) {
  if (x.convention() != Convention::Free || y.convention() != Convention::Free)
    throw std::invalid_argument("free_product: both factors must use the Free convention");
  OperatorExpr out(Convention::Free);
  for (const auto& [g1, c1] : x.terms()) {
    auto e1 = g1.edges();
    for (const auto& [g2, c2] : y.terms()) {
      auto e2 = g2.edges();
      int m1 = static_cast<int>(e1.size());
      int m2 = static_cast<int>(e2.size());
      int required = -1;
      if (target_grade >= 0) {
        required = m1 + m2 - target_grade;
        if (required < 0 || required > std::min(m1, m2)) continue;
      }
      RationalN c12 = c1 * c2;
      for_each_matching(m1, m2, required, [&](const std::vector<int>& matching) {
        SpliceResult s = splice(g1, g2, e1, e2, matching);
        out.add_term(s.graph, c12 * RationalN::n_power(s.free_clusters));
      });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convention conversion, memoized per canonical graph.

struct QuotientExpansion {
  // quotient class -> integer weight (count of partitions, or Mobius sum)
  std::map<PatternGraph, long long> free_to_exact;
  std::map<PatternGraph, long long> exact_to_free;
};

const QuotientExpansion& quotient_expansion(const PatternGraph& g) {
  thread_local std::map<PatternGraph, QuotientExpansion> cache;
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  QuotientExpansion exp;
  for_each_set_partition(g.vertex_count(), [&](const SetPartition& sp) {
    PatternGraph q = g.quotient(sp);
    exp.free_to_exact[q] += 1;
    exp.exact_to_free[q] += partition_mobius(sp);
  });
  return cache.emplace(g, std::move(exp)).first->second;
}

}  // namespace

OperatorExpr free_product(const OperatorExpr& x, const OperatorExpr& y) {
  return free_product_impl(x, y, -1);
}

OperatorExpr free_product_graded(const OperatorExpr& x, const OperatorExpr& y, int m) {
  if (m < 0) throw std::invalid_argument("free_product_graded: negative grade");
  return free_product_impl(x, y, m);
}

OperatorExpr convert(const OperatorExpr& x, Convention target) {
  if (x.convention() == target) return x;
  OperatorExpr out(target);
  for (const auto& [g, c] : x.terms()) {
    const QuotientExpansion& exp = quotient_expansion(g);
    const auto& weights =
        (target == Convention::Exact) ? exp.free_to_exact : exp.exact_to_free;
    for (const auto& [q, w] : weights) {
      if (w == 0) continue;
      out.add_term(q, c * RationalN(BigInt(w)));
    }
  }
  return out;
}

OperatorExpr grade(const OperatorExpr& x, int m) {
  OperatorExpr out(x.convention());
  for (const auto& [g, c] : x.terms())
    if (g.edge_count() == m) out.add_term(g, c);
  return out;
}

OperatorExpr w_op(const Partition& d) {
  return OperatorExpr::single(Convention::Free, PatternGraph::cycle_graph(d), RationalN(1));
}

OperatorExpr w_op_from_permutation(const Permutation& sigma) {
  int m = sigma.degree();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) edges.emplace_back(i, sigma.images[static_cast<size_t>(i)]);
  PatternGraph g = (m == 0) ? PatternGraph() : PatternGraph::from_edges(m, edges);
  return OperatorExpr::single(Convention::Free, g, RationalN(1));
}

OperatorExpr v_op(const TwoFoldGraph& g) {
  OperatorExpr out(Convention::Exact);
  int va = g.a_count(), vb = g.b_count();
  RationalN norm = RationalN::n_power(-vb);

  // Partial matchings between a-vertices and b-vertices: matched pairs share
  // one value, everything else stays pairwise distinct. Every quotient is
  // built straight from the biadjacency, so indices stay aligned.
  std::vector<int> match(static_cast<size_t>(va), -1);
  std::vector<bool> used(static_cast<size_t>(vb), false);
  std::function<void(int)> rec = [&](int a) {
    if (a == va) {
      // Quotient vertex ids: a-vertex i keeps id i; a b-vertex matched to i
      // shares id i; unmatched b-vertices get fresh ids.
      std::vector<int> b_vertex(static_cast<size_t>(vb), -1);
      for (int i = 0; i < va; ++i)
        if (match[static_cast<size_t>(i)] >= 0)
          b_vertex[static_cast<size_t>(match[static_cast<size_t>(i)])] = i;
      int n = va;
      for (int j = 0; j < vb; ++j)
        if (b_vertex[static_cast<size_t>(j)] < 0) b_vertex[static_cast<size_t>(j)] = n++;
      std::vector<int> mult(static_cast<size_t>(n) * n, 0);
      for (int i = 0; i < va; ++i)
        for (int j = 0; j < vb; ++j)
          mult[static_cast<size_t>(i) * n + b_vertex[static_cast<size_t>(j)]] +=
              g.mult(i, j);
      PatternGraph q = (n == 0) ? PatternGraph() : PatternGraph::from_matrix(n, mult);
      out.add_term(q, norm);
      return;
    }
    rec(a + 1);
    for (int b = 0; b < vb; ++b) {
      if (used[static_cast<size_t>(b)]) continue;
      used[static_cast<size_t>(b)] = true;
      match[static_cast<size_t>(a)] = b;
      rec(a + 1);
      match[static_cast<size_t>(a)] = -1;
      used[static_cast<size_t>(b)] = false;
    }
  };
  rec(0);
  return out;
}

namespace {

// Exact-basis expansion of a family element, memoized.
const OperatorExpr& w_exact(const Partition& d) {
  thread_local std::map<Partition, OperatorExpr> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  return cache.emplace(d, convert(w_op(d), Convention::Exact)).first->second;
}

const OperatorExpr& v_exact(const TwoFoldGraph& g) {
  thread_local std::map<TwoFoldGraph, OperatorExpr> cache;
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  return cache.emplace(g, v_op(g)).first->second;
}

// Shared triangular elimination. classify returns true (and the family
// element's Exact expansion plus the coefficient of its maximal term) when
// the graph is family-shaped.
template <typename Label, typename Classify>
void expand_family(const OperatorExpr& x, Classify classify,
                   std::map<Label, RationalN>& coeffs, OperatorExpr& residual) {
  OperatorExpr work = convert(x, Convention::Exact);
  while (!work.is_zero()) {
    // Vertex-maximal term, ties broken by canonical-form order.
    auto pick = work.terms().begin();
    for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
      if (it->first.vertex_count() > pick->first.vertex_count()) pick = it;
    PatternGraph g = pick->first;
    RationalN c = pick->second;

    Label label;
    const OperatorExpr* family = nullptr;
    RationalN lead;
    if (classify(g, label, family, lead)) {
      RationalN k = c / lead;
      coeffs[label] += k;
      if (coeffs[label].is_zero()) coeffs.erase(label);
      work -= family->scaled(k);
    } else {
      residual.add_term(g, c);
      work.add_term(g, -c);
    }
  }
}

}  // namespace

WExpansion expand_in_w(const OperatorExpr& x) {
  WExpansion out;
  expand_family<Partition>(
      x,
      [](const PatternGraph& g, Partition& label, const OperatorExpr*& family,
         RationalN& lead) {
        if (!g.is_cycle_union()) return false;
        label = g.cycle_type();
        family = &w_exact(label);
        lead = RationalN(1);
        return true;
      },
      out.coeffs, out.residual);
  return out;
}

VExpansion expand_in_v(const OperatorExpr& x) {
  VExpansion out;
  expand_family<TwoFoldGraph>(
      x,
      [](const PatternGraph& g, TwoFoldGraph& label, const OperatorExpr*& family,
         RationalN& lead) {
        auto tf = TwoFoldGraph::from_pattern(g);
        if (!tf) return false;
        label = *tf;
        family = &v_exact(label);
        lead = RationalN::n_power(-label.b_count());
        return true;
      },
      out.coeffs, out.residual);
  return out;
}

}  // namespace hurwitz
