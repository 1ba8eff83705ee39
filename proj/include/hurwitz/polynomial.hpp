#pragma once

#include <hurwitz/numeric.hpp>

#include <string>
#include <vector>

namespace hurwitz {

/// Dense polynomial in the single indeterminate N with exact integer
/// coefficients. Coefficients are stored in ascending degree with no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  Poly(long long constant) : Poly(BigInt(constant)) {}
  Poly(BigInt constant);
  explicit Poly(std::vector<BigInt> coeffs);

  /// The monomial N^k (k >= 0).
  static Poly n_power(int k);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }
  BigInt coeff(int k) const;

  BigInt eval(const BigInt& n) const;

  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  BigInt content() const;
  /// this / content(); leading sign preserved.
  Poly primitive_part() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Exact division; throws std::domain_error when the divisor does not
  /// divide this polynomial over the integers.
  Poly divide_exact(const Poly& divisor) const;

  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Primitive polynomial gcd (primitive-part Euclid with pseudo-remainders).
/// The result is primitive with positive leading coefficient; integer
/// content of the inputs is deliberately not included.
Poly poly_gcd_primitive(const Poly& a, const Poly& b);

}  // namespace hurwitz
