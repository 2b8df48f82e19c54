#include <doctest.h>

#include <cmath>
#include <random>

#include "virmod/ball.hpp"
#include "virmod/cyclotomic.hpp"
#include "virmod/errors.hpp"
#include "virmod/rational.hpp"

using namespace virmod;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  IntPoly out;
  for (long v : c) out.emplace_back(v);
  return out;
}

CycNumber random_element(long n, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  std::vector<Rational> coeffs(static_cast<std::size_t>(euler_phi(n)));
  for (auto& c : coeffs) c = make_rational(dist(rng), 1 + (dist(rng) + 9) % 4);
  return CycNumber::from_coeffs(n, coeffs);
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  const Rational a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(to_string(a) == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(is_integer(make_rational(8, 4)));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  for (long n : {5L, 9L, 30L, 66L, 120L}) CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
  CHECK(cyc_root_power(8, 4) == CycNumber(8, Rational(-1)));
  CHECK(cyc_root_power(6, 1) + cyc_root_power(6, -1) == CycNumber(6, Rational(1)));
  CHECK(cyc_root_power(7, 0) == CycNumber(7, Rational(1)));
  CHECK(cyc_root_power(8, 1) * cyc_root_power(8, 7) == CycNumber(8, Rational(1)));
  const CycNumber i = cyc_root_power(4, 1);
  const CycNumber one(4, Rational(1));
  CHECK((one + i) * (one - i) == CycNumber(4, Rational(2)));
}

TEST_CASE("inverse and conjugation") {
  CHECK(CycNumber(5, Rational(2)).inverse() == CycNumber(5, make_rational(1, 2)));
  const CycNumber i = cyc_root_power(4, 1);
  const CycNumber one(4, Rational(1));
  CHECK((one + i).inverse() == (one - i) * make_rational(1, 2));
  for (long k = 0; k < 15; ++k) CHECK(cyc_root_power(15, k).inverse() == cyc_root_power(15, -k));
  CHECK_THROWS_AS(CycNumber(7).inverse(), std::domain_error);
  CHECK(cyc_root_power(8, 1).conj() == cyc_root_power(8, 7));
  const CycNumber real = cyc_root_power(6, 1) + cyc_root_power(6, -1);
  CHECK(real.conj() == real);
  CHECK(one.conj() == one);
}

TEST_CASE("conductor mismatch is rejected") {
  CHECK_THROWS_AS(cyc_root_power(8, 1) + cyc_root_power(12, 1), DomainError);
  const auto [a, b] = common_conductor(cyc_root_power(8, 1), cyc_root_power(12, 1));
  CHECK(a.conductor() == 24);
  CHECK(a * b == cyc_root_power(24, 5));
}

TEST_CASE("cosines") {
  CHECK(cyc_cos(0, 5) == CycNumber(10, Rational(1)));
  CHECK(cyc_cos(1, 3) == CycNumber(6, make_rational(1, 2)));
  CHECK(cyc_cos(7, 7) == CycNumber(14, Rational(-1)));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int t = 0; t < 40; ++t) {
    const long a = dist(rng), b = dist(rng), n = 12;
    CHECK(cyc_cos(a, n) == cyc_cos(a + 2 * n, n));
    CHECK(cyc_cos(a, n) == cyc_cos(-a, n));
    CHECK(cyc_cos(a, n) * cyc_cos(b, n) == (cyc_cos(a - b, n) + cyc_cos(a + b, n)) * make_rational(1, 2));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(2024);
  for (long n : {8L, 12L, 24L, 66L}) {
    CAPTURE(n);
    for (int t = 0; t < 6; ++t) {
      const CycNumber a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a * CycNumber(n, Rational(1)) == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(n, Rational(1)));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("float approximation encloses the exact value") {
  const ComplexBall one = float_approx(CycNumber(3, Rational(1)), 128);
  CHECK(one.re.to_double() == 1.0);
  CHECK(one.re.radius() == 0.0);
  const ComplexBall c = float_approx(cyc_cos(1, 4), 256);
  CHECK(std::abs(c.re.to_double() - std::sqrt(0.5)) < 1e-15);
  CHECK(c.re.radius() < 1e-60);
  CHECK(float_approx(cyc_cos(1, 3), 128).re.to_double() == 0.5);
  CHECK_THROWS(float_approx(cyc_cos(1, 3), 20));

  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const CycNumber a = random_element(24, rng);
    const ComplexBall z = float_approx(a - a, 200);
    CHECK(z.contains_zero());
    if (!a.is_zero()) CHECK_FALSE(float_approx(a, 200).contains_zero());
  }
}

TEST_CASE("root sums reduce like explicit sums") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> k(0, 59), c(-5, 5);
  RootSum acc(60, 4);
  CycNumber expect(60);
  for (int t = 0; t < 50; ++t) {
    const long kk = k(rng), cc = c(rng);
    acc.add(kk, cc);
    expect += cyc_root_power(60, kk) * make_rational(cc, 4);
  }
  CHECK(acc.reduce() == expect);
  RootSum zero(10);
  zero.add(0, 1);
  zero.add(5, 1);
  CHECK(zero.reduces_to_zero());
}

TEST_CASE("balls") {
  const Ball x = Ball::cos_pi(1, 3, 128);
  CHECK(std::abs(x.to_double() - 0.5) < 1e-30);
  CHECK(x.is_positive());
  const Ball s = Ball::sqrt(make_rational(2, 1), 128);
  const Ball two = s * s - Ball::exact(2, 128);
  CHECK(two.contains_zero());
  CHECK(two.radius() < 1e-30);
  CHECK(Ball::exact(4, 64).reciprocal().to_double() == 0.25);
}
