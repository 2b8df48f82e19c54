#include <doctest.h>

#include <numeric>
#include <set>

#include "virmod/errors.hpp"
#include "virmod/minimal_model.hpp"

using namespace virmod;

namespace {

// Hand formula kept separate from the library: h = ((rp-sq)^2 - (p-q)^2)/(4pq).
Rational weight_by_hand(int p, int q, int r, int s) {
  const long u = static_cast<long>(r) * p - static_cast<long>(s) * q;
  const long v = p - q;
  return make_rational(u * u - v * v, 4L * p * q);
}

}  // namespace

TEST_CASE("central charge") {
  CHECK(central_charge(4, 3) == make_rational(1, 2));
  CHECK(central_charge(5, 2) == make_rational(-22, 5));
  CHECK(central_charge(7, 5) == central_charge(5, 7));
  CHECK_THROWS_AS(central_charge(6, 4), DomainError);
  CHECK_THROWS_AS(central_charge(3, 3), DomainError);
  CHECK_THROWS_AS(central_charge(1, 3), DomainError);
}

TEST_CASE("conformal weights") {
  const MinimalModel ising(4, 3);
  CHECK(ising.conformal_weight({2, 2}) == make_rational(1, 16));
  CHECK(ising.conformal_weight({1, 1}) == 0);
  CHECK(MinimalModel(12, 11).conformal_weight({1, 7}) == 8);
  CHECK_THROWS_AS(ising.conformal_weight({3, 1}), DomainError);
  CHECK_THROWS_AS(ising.conformal_weight({1, 4}), DomainError);
}

TEST_CASE("fold") {
  const MinimalModel ising(4, 3);
  CHECK(ising.fold(1, 1) == ising.fold(2, 3));
  CHECK(ising.fold(2, 2) == ising.fold(1, 2));
  CHECK(MinimalModel(5, 2).fold(1, 4) == MinimalModel(5, 2).fold(1, 1));
  const MinimalModel m(6, 5);
  for (int r = 1; r < 5; ++r)
    for (int s = 1; s < 6; ++s) {
      const KacLabel f = m.fold(r, s);
      CHECK(m.fold(f) == f);
      CHECK(m.fold(5 - r, 6 - s) == f);
    }
  CHECK_THROWS_AS(ising.fold(0, 1), DomainError);
}

TEST_CASE("transversal of small models") {
  const MinimalModel ising(4, 3);
  REQUIRE(ising.size() == 3);
  CHECK(ising.label(0) == KacLabel{1, 1});
  CHECK(ising.label(1) == KacLabel{2, 2});
  CHECK(ising.label(2) == KacLabel{1, 3});
  CHECK(ising.weight(1) == make_rational(1, 16));
  CHECK(ising.weight(2) == make_rational(1, 2));

  const MinimalModel ly(5, 2);
  REQUIRE(ly.size() == 2);
  CHECK(ly.label(1) == KacLabel{1, 3});
  CHECK(ly.weight(1) == make_rational(-1, 5));

  CHECK(MinimalModel(12, 11).size() == 55);
}

TEST_CASE("transversal properties over the scan range") {
  for (int p = 2; p <= 30; ++p)
    for (int q = 2; q <= 30; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const MinimalModel m(p, q);
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(m.size() == static_cast<std::size_t>((p - 1) * (q - 1) / 2));
      CHECK(m.label(0) == KacLabel{1, 1});
      std::set<Rational> weights;
      std::set<KacLabel> orbits;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const KacLabel l = m.label(i);
        CHECK(m.weight(i) == weight_by_hand(p, q, l.r, l.s));
        CHECK(m.conformal_weight({q - l.r, p - l.s}) == m.weight(i));
        CHECK(m.index_of(l) == i);
        CHECK(m.index_of(q - l.r, p - l.s) == i);
        weights.insert(m.weight(i));
        orbits.insert(l);
        if (i > 1) {
          const bool ordered = m.weight(i - 1) < m.weight(i) ||
                               (m.weight(i - 1) == m.weight(i) && m.label(i - 1) < m.label(i));
          CHECK(ordered);
        }
      }
      CHECK(weights.size() == m.size());
    }
}

TEST_CASE("effective central charge") {
  CHECK(MinimalModel(5, 2).effective_central_charge() == make_rational(2, 5));
  CHECK(MinimalModel(4, 3).effective_central_charge() == make_rational(1, 2));
  const MinimalModel m(5, 3);
  CHECK(m.weight(m.min_weight_index()) == make_rational(-1, 20));
  CHECK(m.effective_central_charge() == m.central_charge() + make_rational(24, 20));
  for (int p = 2; p <= 30; ++p)
    for (int q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const MinimalModel mm(p, q);
      if (mm.is_unitary())
        CHECK(mm.effective_central_charge() == mm.central_charge());
      else
        CHECK(mm.effective_central_charge() < 1);
    }
}
