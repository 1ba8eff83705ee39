#include <hurwitz/two_fold_graph.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

// Row-major lexicographic minimum over independent row and column
// permutations: for every column order, the optimal row order is the
// ascending sort of the permuted rows.
std::vector<int> canonical_biadjacency(int va, int vb, const std::vector<int>& adj,
                                       long long* aut_out) {
  if (va == 0 || vb == 0) {
    if (aut_out) *aut_out = 1;
    return {};
  }
  std::vector<int> cols(static_cast<size_t>(vb));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<std::vector<int>> best_rows;
  bool have_best = false;
  do {
    std::vector<std::vector<int>> rows(static_cast<size_t>(va),
                                       std::vector<int>(static_cast<size_t>(vb)));
    for (int r = 0; r < va; ++r)
      for (int c = 0; c < vb; ++c)
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            adj[static_cast<size_t>(r) * vb + cols[static_cast<size_t>(c)]];
    std::sort(rows.begin(), rows.end());
    if (!have_best || rows < best_rows) {
      best_rows = rows;
      have_best = true;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));

  if (aut_out) {
    // Stabilizer pairs of the canonical matrix: for each column permutation
    // that maps the row multiset onto itself, the row permutations pairing
    // with it are the ways to rearrange equal rows.
    std::vector<std::vector<int>> canon_sorted = best_rows;  // already sorted
    long long aut = 0;
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::vector<std::vector<int>> rows(static_cast<size_t>(va),
                                         std::vector<int>(static_cast<size_t>(vb)));
      for (int r = 0; r < va; ++r)
        for (int c = 0; c < vb; ++c)
          rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
              best_rows[static_cast<size_t>(r)][static_cast<size_t>(cols[static_cast<size_t>(c)])];
      std::sort(rows.begin(), rows.end());
      if (rows != canon_sorted) continue;
      long long ways = 1;
      size_t i = 0;
      while (i < rows.size()) {
        size_t j = i;
        while (j < rows.size() && rows[j] == rows[i]) ++j;
        for (size_t t = 2; t <= j - i; ++t) ways *= static_cast<long long>(t);
        i = j;
      }
      aut += ways;
    } while (std::next_permutation(cols.begin(), cols.end()));
    *aut_out = aut;
  }

  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(va) * vb);
  for (const auto& row : best_rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

}  // namespace

TwoFoldGraph TwoFoldGraph::from_biadjacency(int va, int vb, const std::vector<int>& adj) {
  if (va < 0 || vb < 0 || adj.size() != static_cast<size_t>(va) * static_cast<size_t>(vb))
    throw std::invalid_argument("TwoFoldGraph: bad biadjacency size");
  if ((va == 0) != (vb == 0))
    throw std::invalid_argument("TwoFoldGraph: isolated vertices");
  for (int x : adj)
    if (x < 0) throw std::invalid_argument("TwoFoldGraph: negative multiplicity");
  for (int r = 0; r < va; ++r) {
    int s = 0;
    for (int c = 0; c < vb; ++c) s += adj[static_cast<size_t>(r) * vb + c];
    if (s == 0) throw std::invalid_argument("TwoFoldGraph: isolated a-vertex");
  }
  for (int c = 0; c < vb; ++c) {
    int s = 0;
    for (int r = 0; r < va; ++r) s += adj[static_cast<size_t>(r) * vb + c];
    if (s == 0) throw std::invalid_argument("TwoFoldGraph: isolated b-vertex");
  }
  TwoFoldGraph g;
  g.va_ = va;
  g.vb_ = vb;
  g.adj_ = canonical_biadjacency(va, vb, adj, &g.aut_);
  g.edges_ = std::accumulate(adj.begin(), adj.end(), 0);
  return g;
}

std::optional<TwoFoldGraph> TwoFoldGraph::from_pattern(const PatternGraph& g) {
  if (!g.is_two_fold_shaped()) return std::nullopt;
  std::vector<int> sources, sinks;
  for (int v = 0; v < g.vertex_count(); ++v)
    (g.out_degree(v) > 0 ? sources : sinks).push_back(v);
  int va = static_cast<int>(sources.size());
  int vb = static_cast<int>(sinks.size());
  std::vector<int> adj(static_cast<size_t>(va) * vb, 0);
  for (int i = 0; i < va; ++i)
    for (int j = 0; j < vb; ++j)
      adj[static_cast<size_t>(i) * vb + j] =
          g.mult(sources[static_cast<size_t>(i)], sinks[static_cast<size_t>(j)]);
  return from_biadjacency(va, vb, adj);
}

PatternGraph TwoFoldGraph::to_pattern() const {
  int n = va_ + vb_;
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < va_; ++a)
    for (int b = 0; b < vb_; ++b)
      m[static_cast<size_t>(a) * n + (va_ + b)] = mult(a, b);
  if (n == 0) return PatternGraph();
  return PatternGraph::from_matrix(n, m);
}

std::vector<int> TwoFoldGraph::a_valences() const {
  std::vector<int> v(static_cast<size_t>(va_), 0);
  for (int a = 0; a < va_; ++a)
    for (int b = 0; b < vb_; ++b) v[static_cast<size_t>(a)] += mult(a, b);
  return v;
}

std::vector<int> TwoFoldGraph::b_valences() const {
  std::vector<int> v(static_cast<size_t>(vb_), 0);
  for (int a = 0; a < va_; ++a)
    for (int b = 0; b < vb_; ++b) v[static_cast<size_t>(b)] += mult(a, b);
  return v;
}

std::string TwoFoldGraph::str() const {
  std::ostringstream out;
  out << "B(" << va_ << "x" << vb_ << ";";
  for (int a = 0; a < va_; ++a) {
    if (a) out << "|";
    for (int b = 0; b < vb_; ++b) {
      if (b) out << ",";
      out << mult(a, b);
    }
  }
  out << ")";
  return out.str();
}

namespace {

// All va x vb matrices with entry sum m and no zero row or column.
void compositions_rec(int cells, int remaining, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == cells - 1) {
    cur.push_back(remaining);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    compositions_rec(cells, remaining - v, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TwoFoldGraph> enumerate_two_fold(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_two_fold: m < 0");
  std::set<TwoFoldGraph> classes;
  if (m == 0) {
    classes.insert(TwoFoldGraph());
  } else {
    for (int va = 1; va <= m; ++va) {
      for (int vb = 1; vb <= m; ++vb) {
        std::vector<int> cur;
        compositions_rec(va * vb, m, cur, [&](const std::vector<int>& adj) {
          for (int r = 0; r < va; ++r) {
            int s = 0;
            for (int c = 0; c < vb; ++c) s += adj[static_cast<size_t>(r) * vb + c];
            if (s == 0) return;
          }
          for (int c = 0; c < vb; ++c) {
            int s = 0;
            for (int r = 0; r < va; ++r) s += adj[static_cast<size_t>(r) * vb + c];
            if (s == 0) return;
          }
          classes.insert(TwoFoldGraph::from_biadjacency(va, vb, adj));
        });
      }
    }
  }
  return {classes.begin(), classes.end()};
}

}  // namespace hurwitz
