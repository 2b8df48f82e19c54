#include <doctest.h>

#include <numeric>
#include <random>

#include "virmod/characters.hpp"
#include "virmod/errors.hpp"
#include "virmod/reference/oracles.hpp"

using namespace virmod;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("partition numbers") {
  const PuiseuxSeries p = inverse_euler_product(12);
  CHECK(p.coefficients() == ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77}));
}

TEST_CASE("Ising vacuum character") {
  const PuiseuxSeries chi = character(MinimalModel(4, 3), {1, 1}, 6);
  CHECK(chi.offset() == make_rational(-1, 48));
  CHECK(chi.coefficients() == ints({1, 0, 1, 1, 2, 2, 3}));
}

TEST_CASE("Lee-Yang character offset") {
  const PuiseuxSeries chi = character(MinimalModel(5, 2), {1, 3}, 10);
  CHECK(chi.offset() == make_rational(-1, 60));
  CHECK(chi.coeff(0) == 1);
}

TEST_CASE("Gram matrix oracle on a hand-computable case") {
  // Level 2 of M(c, h): <L_{-1}^2, L_{-1}^2> = 4h(2h+1), <L_{-2}, L_{-1}^2> = 6h, <L_{-2}, L_{-2}> = 4h + c/2.
  const Rational c = make_rational(1, 2), h = make_rational(1, 16);
  const auto g = reference::gram_matrix(c, h, 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0][0] == 4 * h + c / 2);
  CHECK(g[0][1] == 6 * h);
  CHECK(g[1][1] == 4 * h * (2 * h + 1));
}

TEST_CASE("characters against the Gram oracle") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {5, 3}, {7, 2}}) {
    const MinimalModel m(p, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto dims = reference::graded_dimensions(m.central_charge(), m.weight(i), 6);
      const PuiseuxSeries chi = character(m, m.label(i), 6);
      for (int n = 0; n <= 6; ++n) CHECK(chi.coeff(n) == dims[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("characters are nonnegative integer series with the right offset") {
  for (int p = 2; p <= 30; ++p)
    for (int q = 2; static_cast<long>(p) * q <= 60; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const MinimalModel m(p, q);
      const auto chis = all_characters(m, 30);
      for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(chis[i].nonnegative_integer_coefficients());
        CHECK(chis[i].offset() == m.weight(i) - m.central_charge() / 24);
        CHECK(chis[i].coeff(0) == 1);
      }
    }
}

TEST_CASE("truncation soundness") {
  const MinimalModel m(7, 4);
  for (const auto& l : m.transversal()) {
    const PuiseuxSeries a = character(m, l, 15);
    const PuiseuxSeries b = character(m, l, 25);
    CHECK(b.truncated(15) == a);
  }
}

TEST_CASE("series algebra") {
  const Rational half = make_rational(1, 2);
  const PuiseuxSeries a(half, ints({1, 1}), 6);
  const PuiseuxSeries b(half, ints({1, -1}), 6);
  const PuiseuxSeries prod = a * b;
  CHECK(prod.offset() == 1);
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  CHECK(prod.coeff(2) == -1);
  CHECK(prod.coeff(3) == 0);
  CHECK(prod / b == a);
  CHECK(a * PuiseuxSeries::one(6) == a);
  CHECK((a / a) == PuiseuxSeries::one(6));

  const MinimalModel ising(4, 3);
  const PuiseuxSeries vac = character(ising, {1, 1}, 10);
  const PuiseuxSeries sigma = character(ising, {2, 2}, 10);
  CHECK_THROWS_AS(vac + sigma, DomainError);
  CHECK(vac + PuiseuxSeries(vac.offset(), {}, 10) == vac);

  const MinimalModel e6(12, 11);
  const PuiseuxSeries sum = character(e6, {1, 1}, 12) + character(e6, {1, 7}, 12);
  CHECK(sum.offset() == e6.weight(0) - e6.central_charge() / 24);

  const MinimalModel m(7, 3);
  const auto chis = all_characters(m, 15);
  for (std::size_t i = 0; i < chis.size(); ++i)
    for (std::size_t j = 0; j < chis.size(); ++j) {
      CHECK(chis[i] * chis[j] == chis[j] * chis[i]);
      CHECK(agree_to_common_order((chis[i] * chis[j]) / chis[j], chis[i]));
    }
}

TEST_CASE("S transform at tau = i") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 5}, {5, 4}}) CHECK(s_transform_defect(MinimalModel(p, q), 50) < 1e-8);
}
