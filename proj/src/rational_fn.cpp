#include <hurwitz/rational_fn.hpp>

#include <stdexcept>

namespace hurwitz {

RationalN::RationalN(const Rational& v)
    : num_(numerator(v)), den_(denominator(v)) {}

RationalN::RationalN(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalN: zero denominator");
  reduce();
}

RationalN RationalN::n_power(int k) {
  if (k >= 0) return RationalN(Poly::n_power(k), Poly(1));
  return RationalN(Poly(1), Poly::n_power(-k));
}

void RationalN::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = poly_gcd_primitive(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt c = big_gcd(num_.content(), den_.content());
  if (c > 1) {
    num_ = num_.divide_exact(Poly(c));
    den_ = den_.divide_exact(Poly(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational RationalN::constant_value() const {
  if (!is_constant()) throw std::domain_error("RationalN: not constant in N");
  if (num_.is_zero()) return 0;
  return Rational(num_.coeff(0), den_.coeff(0));
}

RationalN RationalN::operator-() const {
  RationalN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalN RationalN::operator+(const RationalN& o) const {
  return RationalN(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalN RationalN::operator-(const RationalN& o) const {
  return RationalN(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalN RationalN::operator*(const RationalN& o) const {
  return RationalN(num_ * o.num_, den_ * o.den_);
}

RationalN RationalN::operator/(const RationalN& o) const {
  if (o.is_zero()) throw std::domain_error("RationalN: division by zero");
  return RationalN(num_ * o.den_, den_ * o.num_);
}

Rational RationalN::eval_at(const BigInt& n) const {
  BigInt d = den_.eval(n);
  if (d == 0) throw std::domain_error("RationalN: pole at N = " + n.str());
  return Rational(num_.eval(n), d);
}

LimitResult RationalN::limit_at_infinity() const {
  LimitResult r;
  if (num_.is_zero()) return r;  // finite(0)
  int dn = num_.degree(), dd = den_.degree();
  if (dn < dd) return r;
  if (dn == dd) {
    r.value = Rational(num_.leading(), den_.leading());
    return r;
  }
  r.finite = false;
  r.divergence_degree = dn - dd;
  return r;
}

std::string RationalN::str() const {
  if (den_ == Poly(1)) return num_.str();
  auto wrap = [](std::string s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_.str()) + "/" + wrap(den_.str());
}

}  // namespace hurwitz
