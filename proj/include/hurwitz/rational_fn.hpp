#pragma once

#include <hurwitz/polynomial.hpp>

#include <string>

namespace hurwitz {

/// Outcome of letting N go to infinity in a rational function of N.
struct LimitResult {
  bool finite = true;
  Rational value = 0;        // meaningful when finite
  int divergence_degree = 0; // deg num - deg den, meaningful when not finite

  bool operator==(const LimitResult&) const = default;
};

/// Element of the field of rational functions in N with exact integer
/// coefficients. Always stored reduced: the polynomial gcd and the integer
/// content gcd of numerator and denominator are both 1, and the
/// denominator's leading coefficient is positive. Equality is plain
/// component equality of that canonical form.
class RationalN {
 public:
  RationalN() : num_(), den_(1) {}
  RationalN(long long v) : num_(v), den_(1) {}
  RationalN(BigInt v) : num_(std::move(v)), den_(1) {}
  RationalN(const Rational& v);
  RationalN(Poly num, Poly den);

  /// N^k for any integer k (negative gives 1/N^|k|).
  static RationalN n_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  /// Value as a rational number; requires is_constant().
  Rational constant_value() const;

  RationalN operator-() const;
  RationalN operator+(const RationalN& o) const;
  RationalN operator-(const RationalN& o) const;
  RationalN operator*(const RationalN& o) const;
  RationalN operator/(const RationalN& o) const;
  RationalN& operator+=(const RationalN& o) { return *this = *this + o; }
  RationalN& operator-=(const RationalN& o) { return *this = *this - o; }
  RationalN& operator*=(const RationalN& o) { return *this = *this * o; }
  bool operator==(const RationalN& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Exact value at N = n; throws std::domain_error on a pole.
  Rational eval_at(const BigInt& n) const;

  LimitResult limit_at_infinity() const;

  std::string str() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

}  // namespace hurwitz
