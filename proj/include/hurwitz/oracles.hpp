#pragma once

#include <hurwitz/operator_expr.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// All m! permutations of {0..m-1}, in lexicographic order of their image
/// vectors.
std::vector<Permutation> symmetric_group(int m);

/// Structure constants of the center of the group algebra of S_m:
/// coefficient of class d3 = #{(x, y) in C_{d1} x C_{d2} : x o y = z0} for a
/// fixed representative z0 of C_{d3}, by exhaustive enumeration. Zero
/// entries are omitted. Requires m <= 7 and d1, d2 of size m.
std::map<Partition, long long> sym_class_constants(int m, const Partition& d1,
                                                   const Partition& d2);

struct ClassTable {
  int m = 0;
  std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> entries;
};

/// sym_class_constants over every ordered pair of classes of S_m.
ClassTable class_table(int m);

/// Exact matrix of a balanced operator on the monomial basis of homogeneous
/// degree-d polynomials in the N x N variables X_{ae}. Entries are stored as
/// one integer matrix over a positive common denominator, normalized by
/// their common gcd. Column j is the image of basis monomial j.
struct OperatorMatrix {
  int n = 0;       // truncation size N
  int degree = 0;  // homogeneous degree d
  int dim = 0;
  BigInt den = 1;
  std::vector<BigInt> num;  // row-major dim x dim

  Rational entry(int i, int j) const {
    return Rational(num[static_cast<size_t>(i) * dim + j], den);
  }

  void normalize();
  OperatorMatrix multiply(const OperatorMatrix& o) const;
  OperatorMatrix add(const OperatorMatrix& o) const;
  OperatorMatrix scale(const Rational& c) const;
  bool operator==(const OperatorMatrix& o) const;
};

/// Exponent vectors of all degree-d monomials in N*N variables, in
/// ascending lexicographic order of the exponent vector. Variable (a, e)
/// with a, e in {1..N} sits at index (a-1)*N + (e-1).
std::vector<std::vector<int>> monomial_basis(int N, int d);

/// Literal realization of an expression as a differential operator: vertex
/// values are summed per the expression's convention, each edge carries its
/// own e-sum over {1..N}, and the operator is applied monomial by monomial.
/// Coefficients are evaluated at N (a pole there is a domain_error).
OperatorMatrix realize(const OperatorExpr& x, int N, int d);

/// Matrix of the single generator D_{ab} = sum_e X_{ae} d/dX_{be}
/// (a, b are concrete 1-based indices, not summed).
OperatorMatrix d_generator_matrix(int a, int b, int N, int d);

/// True iff realize(free_product(x, y)) equals realize(x) * realize(y)
/// entrywise exactly.
bool oracle_product_check(const OperatorExpr& x, const OperatorExpr& y, int N, int d);

}  // namespace hurwitz
