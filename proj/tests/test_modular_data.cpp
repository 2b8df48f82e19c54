#include <doctest.h>

#include <cmath>
#include <numbers>

#include "virmod/errors.hpp"
#include "virmod/kernels.hpp"
#include "virmod/modular_data.hpp"

using namespace virmod;

namespace {

double sine_formula(int p, int q, KacLabel a, KacLabel b) {
  const double sign = ((1 + a.s * b.r + a.r * b.s) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sin(std::numbers::pi * p * a.r * b.r / q) * std::sin(std::numbers::pi * q * a.s * b.s / p);
}

bool passes(const ModularReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("S_hat agrees with the sine product") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 5}, {7, 4}, {9, 2}, {11, 6}}) {
    const MinimalModel m(p, q);
    const SMatrixHat s(m);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        const double expect = sine_formula(p, q, m.label(i), m.label(j));
        CHECK(s.approx(i, j) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(float_approx(s.entry(i, j), 128).re.to_double() == doctest::Approx(expect).epsilon(1e-12));
      }
  }
}

TEST_CASE("Ising and Lee-Yang S matrices") {
  const MinimalModel ising(4, 3);
  const SMatrixHat s(ising);
  CHECK(s.approx(0, 0) == doctest::Approx(std::sqrt(6.0) / 4));
  CHECK(s.scale_squared() == make_rational(2, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CycNumber sq(s.conductor());
      for (std::size_t k = 0; k < 3; ++k) sq += s.entry(i, k) * s.entry(k, j);
      CHECK(sq == CycNumber(s.conductor(), i == j ? make_rational(3, 2) : Rational(0)));
    }
  const SMatrixHat ly(MinimalModel(5, 2));
  CHECK(ly.size() == 2);
  CHECK(ly.entry(0, 1) == ly.entry(1, 0));
}

TEST_CASE("T exponents") {
  const TMatrix t = build_t(MinimalModel(4, 3));
  CHECK(t.modulus() == 288);
  CHECK(t.exponents == std::vector<long>{-6, 12, 138});
  CHECK(t.phase(0) == make_rational(-1, 48));
  const MinimalModel ly(5, 2);
  const TMatrix tl = build_t(ly);
  CHECK(tl.phase(1) == make_rational(-1, 60));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{7, 3}, {8, 5}, {13, 12}}) {
    const MinimalModel m(p, q);
    const TMatrix tm = build_t(m);
    CHECK(tm.exponents[0] == 6L * (p - q) * (p - q) - static_cast<long>(p) * q);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(tm.phase(i) == m.weight(i) - m.central_charge() / 24);
  }
}

TEST_CASE("modular relations hold exactly") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {3, 5}, {7, 6}, {8, 7}, {10, 3}}) {
    CAPTURE(p);
    CAPTURE(q);
    const ModularReport rep = check_modular_relations(MinimalModel(p, q));
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 4);
  }
}

TEST_CASE("corrupted S_hat is caught") {
  const MinimalModel m(5, 4);
  SMatrixHat s(m);
  s.flip_sign(1, 2);
  const ModularReport rep = check_modular_relations(s, build_t(m));
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(passes(rep, "S_symmetric"));
  CHECK_FALSE(passes(rep, "S_squared"));
}

TEST_CASE("braiding sign is certified, not just the square") {
  // -S_hat satisfies every squared relation; only the sign check sees it.
  const MinimalModel m(5, 3);
  SMatrixHat s(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s.flip_sign(i, j);
  const ModularReport rep = check_modular_relations(s, build_t(m));
  CHECK(passes(rep, "S_symmetric"));
  CHECK(passes(rep, "S_squared"));
  CHECK(passes(rep, "braiding_squared"));
  CHECK_FALSE(passes(rep, "braiding_sign"));
}

TEST_CASE("inconsistent T data is rejected") {
  const MinimalModel m(5, 3);
  TMatrix t = build_t(m);
  for (auto& k : t.exponents) k = -k;
  CHECK_THROWS_AS(check_modular_relations(SMatrixHat(m), t), ConventionError);
}

TEST_CASE("effective vacuum") {
  CHECK(effective_vacuum(MinimalModel(4, 3)) == 0);
  const MinimalModel ly(5, 2);
  CHECK(ly.label(effective_vacuum(ly)) == KacLabel{1, 3});
  const MinimalModel m(5, 3);
  CHECK(m.weight(effective_vacuum(m)) == make_rational(-1, 20));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {8, 3}, {9, 5}, {11, 4}}) {
    const MinimalModel mm(p, q);
    const std::size_t o = effective_vacuum(mm);
    const SMatrixHat s(mm);
    for (std::size_t j = 0; j < mm.size(); ++j) CHECK(s.approx(o, j) > 0);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {7, 5}, {9, 4}}) {
    const MinimalModel m(p, q);
    const SMatrixHat s(m);
    const TMatrix t = build_t(m);
    const long n = 4L * p * q;
    std::vector<long> twist;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const long u = static_cast<long>(m.label(i).r) * p - static_cast<long>(m.label(i).s) * q;
      twist.push_back(u * u);
    }
    CHECK(kernels::s_twist_s(s, twist, n) == kernels::reference::s_twist_s(s, twist, n));

    std::vector<long> x(m.size() * m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) x[i * m.size() + i] = 1;
    CHECK(kernels::commutator_exact(s, x).zero);
    CHECK(kernels::reference::commutator_exact(s, x).zero);
    x[1] = 1;
    const auto fast = kernels::commutator_exact(s, x);
    const auto slow = kernels::reference::commutator_exact(s, x);
    CHECK_FALSE(fast.zero);
    CHECK_FALSE(slow.zero);
    CHECK(fast.bad_row == slow.bad_row);
    CHECK(fast.bad_col == slow.bad_col);
    CHECK_FALSE(kernels::commutator_ball(s, x, 256, 1e-40).zero);
    x[1] = 0;
    CHECK(kernels::commutator_ball(s, x, 256, 1e-40).zero);
  }
}
