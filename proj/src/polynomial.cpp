#include <hurwitz/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace hurwitz {

Poly::Poly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::n_power(int k) {
  if (k < 0) throw std::invalid_argument("Poly::n_power: negative exponent");
  std::vector<BigInt> c(static_cast<size_t>(k) + 1, BigInt(0));
  c.back() = 1;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k)];
}

BigInt Poly::eval(const BigInt& n) const {
  BigInt v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * n + *it;
  return v;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) g = big_gcd(g, x);
  return g < 0 ? -g : g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  BigInt g = content();
  std::vector<BigInt> c = c_;
  for (auto& x : c) x /= g;
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<BigInt> c = c_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  if (is_zero()) return Poly();
  if (degree() < divisor.degree())
    throw std::domain_error("Poly: inexact division (degree)");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(c_.size() - divisor.c_.size() + 1, BigInt(0));
  const BigInt& lead = divisor.leading();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt top = rem[static_cast<size_t>(k) + divisor.c_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("Poly: inexact division");
    BigInt q = top / lead;
    quot[static_cast<size_t>(k)] = q;
    for (size_t i = 0; i < divisor.c_.size(); ++i)
      rem[static_cast<size_t>(k) + i] -= q * divisor.c_[i];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("Poly: inexact division (remainder)");
  return Poly(std::move(quot));
}

namespace {

// Division-free pseudo-remainder: repeatedly r := lc(b)*r - lc(r)*N^d*b.
// The result is a scalar multiple of the true remainder, which is all the
// primitive-part Euclid loop needs.
Poly pseudo_rem(Poly r, const Poly& b) {
  const BigInt lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    BigInt top = r.leading();
    std::vector<BigInt> scaled(r.coeffs());
    for (auto& x : scaled) x *= lead;
    std::vector<BigInt> sub(static_cast<size_t>(d) + b.coeffs().size(), BigInt(0));
    for (size_t i = 0; i < b.coeffs().size(); ++i)
      sub[static_cast<size_t>(d) + i] = top * b.coeffs()[i];
    r = Poly(std::move(scaled)) - Poly(std::move(sub));
  }
  return r;
}

}  // namespace

Poly poly_gcd_primitive(const Poly& a, const Poly& b) {
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  if (x.is_zero()) return y.is_zero() ? Poly() : (y.leading() < 0 ? -y : y);
  if (y.is_zero()) return x.leading() < 0 ? -x : x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (true) {
    Poly r = pseudo_rem(x, y);
    if (r.is_zero()) break;
    x = y;
    y = r.primitive_part();
  }
  return y.leading() < 0 ? -y : y;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& a = coeff(k);
    if (a == 0) continue;
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag.str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << "N";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace hurwitz
