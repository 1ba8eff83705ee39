#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hurwitz/json_io.hpp>
#include <hurwitz/rational_fn.hpp>

#include <random>

using namespace hurwitz;

namespace {

Poly poly(std::initializer_list<long long> ascending) {
  std::vector<BigInt> c;
  for (long long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

RationalN rn(std::initializer_list<long long> num, std::initializer_list<long long> den) {
  return RationalN(poly(num), poly(den));
}

RationalN random_rational_fn(std::mt19937& rng, bool nonzero_required = false) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto random_poly = [&](bool nonzero) {
    while (true) {
      int d = deg(rng);
      std::vector<BigInt> c(static_cast<size_t>(d) + 1);
      for (auto& x : c) x = coeff(rng);
      Poly p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  while (true) {
    RationalN r(random_poly(false), random_poly(true));
    if (!nonzero_required || !r.is_zero()) return r;
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
  Poly a = poly({-1, 0, 1});  // N^2 - 1
  Poly b = poly({-1, 1});     // N - 1
  CHECK(a.divide_exact(b) == poly({1, 1}));
  CHECK(poly_gcd_primitive(a, b) == b);
  CHECK(a.eval(3) == 8);
  CHECK(poly({0}).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK_THROWS_AS(poly({1, 1}).divide_exact(poly({0, 1})), std::domain_error);
}

TEST_CASE("rational function arithmetic reduces to canonical form") {
  // div(N^2-1, N-1) = N+1
  RationalN q = rn({-1, 0, 1}, {1}) / rn({-1, 1}, {1});
  CHECK(q == rn({1, 1}, {1}));

  // 1/N + 1/N = 2/N
  RationalN inv_n = RationalN::n_power(-1);
  CHECK(inv_n + inv_n == rn({2}, {0, 1}));

  // N * 1/N = 1
  CHECK(RationalN::n_power(1) * inv_n == RationalN(1));

  // content and sign normalization
  CHECK(rn({2, 2}, {4, 4}) == rn({1}, {2}));
  CHECK(rn({1}, {-1, -1}) == rn({-1}, {1, 1}));
  CHECK(rn({-1, 0, 1}, {-1, 1}) == rn({1, 1}, {1}));

  CHECK_THROWS_AS(RationalN(1) / RationalN(0), std::domain_error);
}

TEST_CASE("limits at infinity") {
  // (2N^3+N)/N^3 -> 2
  LimitResult l1 = rn({0, 1, 0, 2}, {0, 0, 0, 1}).limit_at_infinity();
  CHECK(l1.finite);
  CHECK(l1.value == 2);

  // (N+1)/N^2 -> 0
  LimitResult l2 = rn({1, 1}, {0, 0, 1}).limit_at_infinity();
  CHECK(l2.finite);
  CHECK(l2.value == 0);

  // (N^2+N)/N diverges with degree 1
  LimitResult l3 = rn({0, 1, 1}, {0, 1}).limit_at_infinity();
  CHECK_FALSE(l3.finite);
  CHECK(l3.divergence_degree == 1);

  CHECK(RationalN(0).limit_at_infinity() == LimitResult{true, 0, 0});
}

TEST_CASE("evaluation at concrete N") {
  // (N^2+N)/2 at N=3 -> 6
  CHECK(rn({0, 1, 1}, {2}).eval_at(3) == 6);
  // 1/N at N=2 -> 1/2
  CHECK(RationalN::n_power(-1).eval_at(2) == Rational(1, 2));
  // (N-2)/(N-2) reduces to 1, so N=2 is not a pole of the stored form.
  CHECK(rn({-2, 1}, {-2, 1}) == RationalN(1));
  CHECK(rn({-2, 1}, {-2, 1}).eval_at(2) == 1);
  // A genuine pole survives reduction.
  CHECK_THROWS_AS(rn({1}, {-2, 1}).eval_at(2), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    RationalN a = random_rational_fn(rng);
    RationalN b = random_rational_fn(rng);
    RationalN c = random_rational_fn(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RationalN(0));
    RationalN nz = random_rational_fn(rng, /*nonzero_required=*/true);
    CHECK(nz / nz == RationalN(1));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RationalN a = random_rational_fn(rng);
    RationalN b = random_rational_fn(rng);
    for (long long n = 2; n <= 7; ++n) {
      BigInt nn(n);
      bool pole = false;
      Rational va, vb;
      try {
        va = a.eval_at(nn);
        vb = b.eval_at(nn);
      } catch (const std::domain_error&) {
        pole = true;
      }
      if (pole) continue;
      CHECK((a + b).eval_at(nn) == va + vb);
      CHECK((a * b).eval_at(nn) == va * vb);
      CHECK((a - b).eval_at(nn) == va - vb);
    }
  }
}

TEST_CASE("JSON keeps oversized coefficients exact") {
  // Coefficients beyond 64 bits are serialized as decimal strings.
  BigInt huge("123456789012345678901234567890");
  RationalN r(Poly(std::vector<BigInt>{huge, 1}), Poly(std::vector<BigInt>{7}));
  json j = to_json(r);
  CHECK(j["num"][0].is_string());
  CHECK(j["num"][1].is_number_integer());
  CHECK(rational_fn_from_json(j) == r);
  CHECK(bigint_from_json(bigint_to_json(huge)) == huge);
  CHECK(bigint_from_json(bigint_to_json(BigInt(-42))) == -42);
}

TEST_CASE("limit of a product of finite limits") {
  std::mt19937 rng(99);
  int checked = 0;
  while (checked < 200) {
    RationalN a = random_rational_fn(rng);
    RationalN b = random_rational_fn(rng);
    LimitResult la = a.limit_at_infinity();
    LimitResult lb = b.limit_at_infinity();
    if (!la.finite || !lb.finite) continue;
    LimitResult lab = (a * b).limit_at_infinity();
    CHECK(lab.finite);
    CHECK(lab.value == la.value * lb.value);
    ++checked;
  }
}
