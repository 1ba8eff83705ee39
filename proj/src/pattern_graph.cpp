#include <hurwitz/pattern_graph.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

struct ComponentCanon {
  std::vector<int> matrix;  // k x k row-major, canonical
  int k = 0;
  long long aut = 1;

  auto operator<=>(const ComponentCanon& o) const {
    if (auto c = k <=> o.k; c != 0) return c;
    return matrix <=> o.matrix;
  }
  bool operator==(const ComponentCanon& o) const {
    return k == o.k && matrix == o.matrix;
  }
};

// Iterative refinement of vertex classes by structure. Returns, per vertex,
// the rank of its class; ranks are ordered by signature content, so they are
// invariant under relabeling of the input.
std::vector<int> refine_classes(int k, const std::vector<int>& m) {
  std::vector<int> rank(static_cast<size_t>(k), 0);
  int classes = 1;
  for (int round = 0; round < k; ++round) {
    std::vector<std::vector<long long>> sig(static_cast<size_t>(k));
    for (int v = 0; v < k; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(rank[static_cast<size_t>(v)]);
      s.push_back(m[static_cast<size_t>(v) * k + v]);  // loops
      std::vector<std::pair<int, int>> outs, ins;
      for (int w = 0; w < k; ++w) {
        if (w == v) continue;
        int mo = m[static_cast<size_t>(v) * k + w];
        int mi = m[static_cast<size_t>(w) * k + v];
        if (mo) outs.emplace_back(mo, rank[static_cast<size_t>(w)]);
        if (mi) ins.emplace_back(mi, rank[static_cast<size_t>(w)]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      s.push_back(static_cast<long long>(outs.size()));
      for (auto& [mm, rr] : outs) {
        s.push_back(mm);
        s.push_back(rr);
      }
      s.push_back(static_cast<long long>(ins.size()));
      for (auto& [mm, rr] : ins) {
        s.push_back(mm);
        s.push_back(rr);
      }
    }
    std::vector<std::vector<long long>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < k; ++v)
      rank[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) -
          uniq.begin());
    int nc = static_cast<int>(uniq.size());
    if (nc == classes) break;
    classes = nc;
  }
  return rank;
}

// Canonical form of one weakly-connected component: the minimal matrix in
// incremental shell order (for each new position p, row p over columns
// 0..p followed by column p over rows 0..p-1), minimized over all vertex
// orderings that list refinement classes in class-rank order. A level
// search keeps every partial ordering achieving the minimal prefix, so the
// number of survivors at the end is exactly the automorphism count.
ComponentCanon canon_component(int k, const std::vector<int>& m) {
  ComponentCanon out;
  out.k = k;
  if (k == 0) return out;

  std::vector<int> cls = refine_classes(k, m);
  // Positions are pre-assigned to classes: all class-0 vertices first, etc.
  std::vector<int> class_of_position;
  {
    std::vector<int> sizes;
    for (int v = 0; v < k; ++v) {
      if (cls[static_cast<size_t>(v)] >= static_cast<int>(sizes.size()))
        sizes.resize(static_cast<size_t>(cls[static_cast<size_t>(v)]) + 1, 0);
      ++sizes[static_cast<size_t>(cls[static_cast<size_t>(v)])];
    }
    for (size_t c = 0; c < sizes.size(); ++c)
      class_of_position.insert(class_of_position.end(), static_cast<size_t>(sizes[c]),
                               static_cast<int>(c));
  }

  std::vector<std::vector<int>> level = {{}};  // partial orderings, all with equal shell prefix
  std::vector<int> shell;                      // the shared minimal prefix
  for (int p = 0; p < k; ++p) {
    int want = class_of_position[static_cast<size_t>(p)];
    std::vector<std::pair<std::vector<int>, size_t>> extensions;  // (segment, index into survivors)
    std::vector<std::vector<int>> survivors;
    std::vector<int> best_seg;
    bool have_best = false;
    for (const auto& perm : level) {
      std::vector<bool> used(static_cast<size_t>(k), false);
      for (int v : perm) used[static_cast<size_t>(v)] = true;
      for (int v = 0; v < k; ++v) {
        if (used[static_cast<size_t>(v)] || cls[static_cast<size_t>(v)] != want) continue;
        std::vector<int> seg;
        seg.reserve(static_cast<size_t>(2 * p + 1));
        for (int q = 0; q < p; ++q) seg.push_back(m[static_cast<size_t>(v) * k + perm[static_cast<size_t>(q)]]);
        seg.push_back(m[static_cast<size_t>(v) * k + v]);
        for (int q = 0; q < p; ++q) seg.push_back(m[static_cast<size_t>(perm[static_cast<size_t>(q)]) * k + v]);
        if (!have_best || seg < best_seg) {
          best_seg = seg;
          have_best = true;
          survivors.clear();
        }
        if (seg == best_seg) {
          auto ext = perm;
          ext.push_back(v);
          survivors.push_back(std::move(ext));
        }
      }
    }
    if (!have_best)
      throw std::logic_error("canon_component: class/position mismatch");
    shell.insert(shell.end(), best_seg.begin(), best_seg.end());
    level = std::move(survivors);
  }

  out.aut = static_cast<long long>(level.size());
  const std::vector<int>& perm = level.front();
  out.matrix.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.matrix[static_cast<size_t>(i) * k + j] =
          m[static_cast<size_t>(perm[static_cast<size_t>(i)]) * k + perm[static_cast<size_t>(j)]];
  return out;
}

}  // namespace

PatternGraph PatternGraph::canonicalize(int n, const std::vector<int>& mult) {
  PatternGraph g;
  if (n == 0) return g;

  // Split into weakly connected components.
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (mult[static_cast<size_t>(u) * n + v] > 0) parent[static_cast<size_t>(find(u))] = find(v);

  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);

  std::vector<ComponentCanon> canons;
  for (auto& [root, verts] : comps) {
    int k = static_cast<int>(verts.size());
    std::vector<int> sub(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub[static_cast<size_t>(i) * k + j] =
            mult[static_cast<size_t>(verts[static_cast<size_t>(i)]) * n + verts[static_cast<size_t>(j)]];
    canons.push_back(canon_component(k, sub));
  }
  std::sort(canons.begin(), canons.end());

  g.n_ = n;
  g.mult_.assign(static_cast<size_t>(n) * n, 0);
  int base = 0;
  long long aut = 1;
  size_t i = 0;
  while (i < canons.size()) {
    size_t j = i;
    while (j < canons.size() && canons[j] == canons[i]) ++j;
    long long run = static_cast<long long>(j - i);
    for (long long t = 2; t <= run; ++t) aut *= t;  // identical components permute freely
    for (size_t t = i; t < j; ++t) {
      const auto& c = canons[t];
      aut *= c.aut;
      for (int a = 0; a < c.k; ++a)
        for (int b = 0; b < c.k; ++b)
          g.mult_[static_cast<size_t>(base + a) * n + (base + b)] =
              c.matrix[static_cast<size_t>(a) * c.k + b];
      base += c.k;
    }
    i = j;
  }
  g.aut_ = aut;
  g.edges_ = std::accumulate(g.mult_.begin(), g.mult_.end(), 0);
  return g;
}

PatternGraph PatternGraph::from_matrix(int n, const std::vector<int>& mult) {
  if (n < 0 || mult.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw std::invalid_argument("PatternGraph: bad matrix size");
  for (int x : mult)
    if (x < 0) throw std::invalid_argument("PatternGraph: negative multiplicity");
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int w = 0; w < n; ++w)
      deg += mult[static_cast<size_t>(v) * n + w] + mult[static_cast<size_t>(w) * n + v];
    if (deg == 0) throw std::invalid_argument("PatternGraph: isolated vertex");
  }
  return canonicalize(n, mult);
}

PatternGraph PatternGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> mult(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("PatternGraph: edge endpoint out of range");
    ++mult[static_cast<size_t>(u) * n + v];
  }
  return from_matrix(n, mult);
}

PatternGraph PatternGraph::cycle_graph(const Partition& d) {
  int n = d.size();
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (int part : d.parts) {
    for (int i = 0; i < part; ++i) edges.emplace_back(base + i, base + (i + 1) % part);
    base += part;
  }
  if (n == 0) return PatternGraph();
  return from_edges(n, edges);
}

BigInt PatternGraph::aut_order_with_edge_factor() const {
  BigInt a = aut_;
  for (int x : mult_) a *= factorial(x);
  return a;
}

std::vector<std::pair<int, int>> PatternGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edges_));
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      for (int t = 0; t < mult(u, v); ++t) out.emplace_back(u, v);
  return out;
}

int PatternGraph::out_degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += mult(v, w);
  return d;
}

int PatternGraph::in_degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += mult(w, v);
  return d;
}

PatternGraph PatternGraph::quotient(const SetPartition& sp) const {
  if (sp.ground_size() != n_)
    throw std::invalid_argument("PatternGraph::quotient: partition does not cover the vertex set");
  int k = sp.block_count;
  std::vector<int> q(static_cast<size_t>(k) * k, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      q[static_cast<size_t>(sp.block_of[static_cast<size_t>(u)]) * k +
        sp.block_of[static_cast<size_t>(v)]] += mult(u, v);
  return canonicalize(k, q);
}

PatternGraph PatternGraph::disjoint_union(const PatternGraph& o) const {
  int n = n_ + o.n_;
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) m[static_cast<size_t>(u) * n + v] = mult(u, v);
  for (int u = 0; u < o.n_; ++u)
    for (int v = 0; v < o.n_; ++v)
      m[static_cast<size_t>(n_ + u) * n + (n_ + v)] = o.mult(u, v);
  return canonicalize(n, m);
}

bool PatternGraph::is_cycle_union() const {
  for (int v = 0; v < n_; ++v)
    if (out_degree(v) != 1 || in_degree(v) != 1) return false;
  return true;
}

Partition PatternGraph::cycle_type() const {
  if (!is_cycle_union())
    throw std::domain_error("PatternGraph::cycle_type: not a union of cycles");
  std::vector<int> succ(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v)
    for (int w = 0; w < n_; ++w)
      if (mult(v, w)) succ[static_cast<size_t>(v)] = w;
  Permutation p;
  p.images = std::move(succ);
  return hurwitz::cycle_type(p);
}

bool PatternGraph::is_two_fold_shaped() const {
  for (int v = 0; v < n_; ++v)
    if (out_degree(v) > 0 && in_degree(v) > 0) return false;
  return true;
}

std::string PatternGraph::str() const {
  std::ostringstream out;
  out << "G(" << n_ << ";";
  bool first = true;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (mult(u, v)) {
        if (!first) out << ",";
        first = false;
        out << u << "->" << v;
        if (mult(u, v) > 1) out << "x" << mult(u, v);
      }
  out << ")";
  return out.str();
}

long long brute_force_aut_order(int n, const std::vector<int>& mult) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (mult[static_cast<size_t>(u) * n + v] !=
            mult[static_cast<size_t>(perm[static_cast<size_t>(u)]) * n + perm[static_cast<size_t>(v)]])
          ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace hurwitz
