#include <doctest.h>

#include "virmod/errors.hpp"
#include "virmod/fusion.hpp"

using namespace virmod;

TEST_CASE("Ising fusion") {
  const MinimalModel ising(4, 3);
  const KacLabel sigma{2, 2}, eps{1, 3}, vac{1, 1};
  CHECK(fusion_targets(ising, sigma, sigma) == std::vector<KacLabel>{vac, eps});
  CHECK(verlinde_coeff(ising, sigma, sigma, eps) == 1);
  CHECK(verlinde_coeff(ising, sigma, eps, sigma) == 1);
  CHECK(verlinde_coeff(ising, eps, eps, sigma) == 0);
  CHECK(fusion_table(ising).nonzero_count() == 10);
}

TEST_CASE("Lee-Yang fusion") {
  const MinimalModel ly(5, 2);
  const KacLabel phi{1, 3};
  CHECK(fusion_targets(ly, phi, phi) == std::vector<KacLabel>{{1, 1}, phi});
  CHECK(verlinde_coeff(ly, phi, phi, phi) == 1);
}

TEST_CASE("unit and fold invariance") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{6, 5}, {7, 4}, {3, 8}}) {
    const MinimalModel m(p, q);
    for (const auto& a : m.transversal()) {
      CHECK(fusion_targets(m, {1, 1}, a) == std::vector<KacLabel>{a});
      const KacLabel a2{q - a.r, p - a.s};
      for (const auto& b : m.transversal())
        for (const auto& c : m.transversal()) {
          const int n = fusion_coeff(m, a, b, c);
          CHECK(n == fusion_coeff(m, a2, b, c));
          CHECK(n == fusion_coeff(m, b, a, c));
          CHECK(n == fusion_coeff(m, a, b, {q - c.r, p - c.s}));
        }
    }
  }
}

TEST_CASE("full tables agree with Verlinde") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 4}, {7, 2}, {7, 3}, {2, 9}}) {
    CAPTURE(p);
    CAPTURE(q);
    const FusionTable t = fusion_table(MinimalModel(p, q));
    CHECK(t.mismatches.empty());
    for (const auto& c : t.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("associativity on (5,4) by hand contraction") {
  const MinimalModel m(5, 4);
  const FusionTable t = fusion_table(m);
  const std::size_t d = m.size();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t x = 0; x < d; ++x) {
          long lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < d; ++e) {
            lhs += t(a, b, e) * t(e, c, x);
            rhs += t(b, c, e) * t(a, e, x);
          }
          CHECK(lhs == rhs);
        }
}

TEST_CASE("invalid labels") {
  CHECK_THROWS_AS(fusion_coeff(MinimalModel(4, 3), {3, 1}, {1, 1}, {1, 1}), DomainError);
}
