#include <hurwitz/oracles.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

std::vector<Permutation> symmetric_group(int m) {
  if (m < 0) throw std::invalid_argument("symmetric_group: m < 0");
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.images = img;
    out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::map<Partition, long long> sym_class_constants(int m, const Partition& d1,
                                                   const Partition& d2) {
  if (m > 7) throw std::invalid_argument("sym_class_constants: m > 7");
  if (d1.size() != m || d2.size() != m)
    throw std::invalid_argument("sym_class_constants: partitions must have size m");
  std::map<Partition, std::vector<Permutation>> classes;
  for (auto& p : symmetric_group(m)) classes[cycle_type(p)].push_back(std::move(p));

  const auto& c1 = classes.at(d1);
  std::map<Partition, long long> out;
  for (const auto& [d3, c3] : classes) {
    const Permutation& z0 = c3.front();
    long long count = 0;
    for (const auto& x : c1) {
      // x o y = z0  <=>  y = x^{-1} o z0; count the y that land in C_{d2}.
      if (cycle_type(x.inverse().compose(z0)) == d2) ++count;
    }
    if (count != 0) out.emplace(d3, count);
  }
  return out;
}

ClassTable class_table(int m) {
  ClassTable t;
  t.m = m;
  auto labels = enumerate_partitions(m);
  for (const auto& d1 : labels)
    for (const auto& d2 : labels)
      t.entries.emplace(std::make_pair(d1, d2), sym_class_constants(m, d1, d2));
  return t;
}

void OperatorMatrix::normalize() {
  BigInt g = den;
  for (const auto& x : num) {
    g = big_gcd(g, x);
    if (g == 1) break;
  }
  if (g > 1) {
    den /= g;
    for (auto& x : num) x /= g;
  }
}

OperatorMatrix OperatorMatrix::multiply(const OperatorMatrix& o) const {
  if (dim != o.dim || n != o.n || degree != o.degree)
    throw std::invalid_argument("OperatorMatrix: shape mismatch");
  OperatorMatrix r;
  r.n = n;
  r.degree = degree;
  r.dim = dim;
  r.den = den * o.den;
  r.num.assign(static_cast<size_t>(dim) * dim, BigInt(0));
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const BigInt& a = num[static_cast<size_t>(i) * dim + k];
      if (a == 0) continue;
      for (int j = 0; j < dim; ++j) {
        const BigInt& b = o.num[static_cast<size_t>(k) * dim + j];
        if (b == 0) continue;
        r.num[static_cast<size_t>(i) * dim + j] += a * b;
      }
    }
  }
  r.normalize();
  return r;
}

OperatorMatrix OperatorMatrix::add(const OperatorMatrix& o) const {
  if (dim != o.dim || n != o.n || degree != o.degree)
    throw std::invalid_argument("OperatorMatrix: shape mismatch");
  OperatorMatrix r;
  r.n = n;
  r.degree = degree;
  r.dim = dim;
  r.den = big_lcm(den, o.den);
  BigInt fa = r.den / den, fb = r.den / o.den;
  r.num.resize(num.size());
  for (size_t i = 0; i < num.size(); ++i) r.num[i] = num[i] * fa + o.num[i] * fb;
  r.normalize();
  return r;
}

OperatorMatrix OperatorMatrix::scale(const Rational& c) const {
  OperatorMatrix r = *this;
  r.den *= denominator(c);
  for (auto& x : r.num) x *= numerator(c);
  r.normalize();
  return r;
}

bool OperatorMatrix::operator==(const OperatorMatrix& o) const {
  return n == o.n && degree == o.degree && dim == o.dim && den == o.den &&
         num == o.num;
}

std::vector<std::vector<int>> monomial_basis(int N, int d) {
  int vars = N * N;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == vars - 1) {
      cur[static_cast<size_t>(pos)] = remaining;
      out.push_back(cur);
      cur[static_cast<size_t>(pos)] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
      cur[static_cast<size_t>(pos)] = 0;
    }
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Realizer {
  int N, d, vars;
  std::vector<std::vector<int>> basis;
  std::map<std::vector<int>, int> index;

  Realizer(int N_, int d_) : N(N_), d(d_), vars(N_ * N_) {
    basis = monomial_basis(N, d);
    for (size_t i = 0; i < basis.size(); ++i)
      index.emplace(basis[i], static_cast<int>(i));
  }

  // Accumulates, into column entries, the action of one graph term on one
  // basis monomial. The enumeration is driven by the derivative targets:
  // each edge picks a variable from the monomial's support, which pins the
  // head value and the edge's e-index; remaining (head-free) vertices are
  // summed explicitly.
  void apply_term(const PatternGraph& g, Convention conv, const BigInt& weight,
                  const std::vector<int>& p, std::vector<BigInt>& column) {
    const int nv = g.vertex_count();
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());

    std::vector<int> support;
    for (int v = 0; v < vars; ++v)
      if (p[static_cast<size_t>(v)] > 0) support.push_back(v);

    std::vector<int> value(static_cast<size_t>(nv), 0);  // 1-based; 0 = unset
    std::vector<int> evec(static_cast<size_t>(m), 0);
    std::vector<int> dcount(static_cast<size_t>(vars), 0);

    std::vector<int> head_free;  // vertices never pinned by a derivative
    {
      std::vector<bool> is_head(static_cast<size_t>(nv), false);
      for (auto [t, h] : edges) is_head[static_cast<size_t>(h)] = true;
      for (int v = 0; v < nv; ++v)
        if (!is_head[static_cast<size_t>(v)]) head_free.push_back(v);
    }

    auto value_in_use = [&](int val) {
      for (int v = 0; v < nv; ++v)
        if (value[static_cast<size_t>(v)] == val) return true;
      return false;
    };

    // Phase 2: sum the unpinned vertices, then emit the monomial image.
    std::function<void(size_t)> fill_free = [&](size_t fi) {
      if (fi == head_free.size()) {
        BigInt coeff = weight;
        std::vector<int> res = p;
        for (int v = 0; v < vars; ++v) {
          for (int k = 0; k < dcount[static_cast<size_t>(v)]; ++k) {
            coeff *= res[static_cast<size_t>(v)];
            if (res[static_cast<size_t>(v)] == 0) return;
            --res[static_cast<size_t>(v)];
          }
        }
        if (coeff == 0) return;
        for (int i = 0; i < m; ++i) {
          int a = value[static_cast<size_t>(edges[static_cast<size_t>(i)].first)];
          int var = (a - 1) * N + (evec[static_cast<size_t>(i)] - 1);
          ++res[static_cast<size_t>(var)];
        }
        column[static_cast<size_t>(index.at(res))] += coeff;
        return;
      }
      int v = head_free[fi];
      for (int val = 1; val <= N; ++val) {
        if (conv == Convention::Exact && value_in_use(val)) continue;
        value[static_cast<size_t>(v)] = val;
        fill_free(fi + 1);
        value[static_cast<size_t>(v)] = 0;
      }
    };

    // Phase 1: per edge, choose the variable its derivative hits.
    std::function<void(int)> choose = [&](int i) {
      if (i == m) {
        fill_free(0);
        return;
      }
      int head = edges[static_cast<size_t>(i)].second;
      for (int var : support) {
        int a = var / N + 1, e = var % N + 1;
        int prev = value[static_cast<size_t>(head)];
        if (prev != 0 && prev != a) continue;
        if (prev == 0) {
          if (conv == Convention::Exact && value_in_use(a)) continue;
          value[static_cast<size_t>(head)] = a;
        }
        evec[static_cast<size_t>(i)] = e;
        ++dcount[static_cast<size_t>(var)];
        choose(i + 1);
        --dcount[static_cast<size_t>(var)];
        if (prev == 0) value[static_cast<size_t>(head)] = 0;
      }
    };

    if (m == 0) {
      fill_free(0);
      return;
    }
    choose(0);
  }
};

}  // namespace

OperatorMatrix realize(const OperatorExpr& x, int N, int d) {
  if (N < 1 || d < 0) throw std::invalid_argument("realize: need N >= 1, d >= 0");
  Realizer rz(N, d);
  OperatorMatrix out;
  out.n = N;
  out.degree = d;
  out.dim = static_cast<int>(rz.basis.size());
  out.den = 1;
  out.num.assign(static_cast<size_t>(out.dim) * out.dim, BigInt(0));

  for (const auto& [g, c] : x.terms()) {
    Rational scalar = c.eval_at(N);
    if (scalar == 0) continue;
    // Rescale the running matrix so the term's denominator divides out.den.
    BigInt nden = big_lcm(out.den, denominator(scalar));
    if (nden != out.den) {
      BigInt f = nden / out.den;
      for (auto& v : out.num) v *= f;
      out.den = nden;
    }
    BigInt weight = numerator(scalar) * (out.den / denominator(scalar));

    std::vector<BigInt> column(static_cast<size_t>(out.dim));
    for (int j = 0; j < out.dim; ++j) {
      std::fill(column.begin(), column.end(), BigInt(0));
      rz.apply_term(g, x.convention(), weight, rz.basis[static_cast<size_t>(j)], column);
      for (int i = 0; i < out.dim; ++i)
        out.num[static_cast<size_t>(i) * out.dim + j] += column[static_cast<size_t>(i)];
    }
  }
  out.normalize();
  return out;
}

OperatorMatrix d_generator_matrix(int a, int b, int N, int d) {
  if (a < 1 || a > N || b < 1 || b > N)
    throw std::invalid_argument("d_generator_matrix: indices out of range");
  Realizer rz(N, d);
  OperatorMatrix out;
  out.n = N;
  out.degree = d;
  out.dim = static_cast<int>(rz.basis.size());
  out.den = 1;
  out.num.assign(static_cast<size_t>(out.dim) * out.dim, BigInt(0));
  for (int j = 0; j < out.dim; ++j) {
    const auto& p = rz.basis[static_cast<size_t>(j)];
    for (int e = 1; e <= N; ++e) {
      int dv = (b - 1) * N + (e - 1);
      if (p[static_cast<size_t>(dv)] == 0) continue;
      std::vector<int> res = p;
      BigInt coeff = res[static_cast<size_t>(dv)];
      --res[static_cast<size_t>(dv)];
      ++res[static_cast<size_t>((a - 1) * N + (e - 1))];
      out.num[static_cast<size_t>(rz.index.at(res)) * out.dim + j] += coeff;
    }
  }
  out.normalize();
  return out;
}

bool oracle_product_check(const OperatorExpr& x, const OperatorExpr& y, int N, int d) {
  OperatorMatrix lhs = realize(free_product(x, y), N, d);
  OperatorMatrix rhs = realize(x, N, d).multiply(realize(y, N, d));
  return lhs == rhs;
}

}  // namespace hurwitz
