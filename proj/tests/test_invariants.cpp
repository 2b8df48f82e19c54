#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "virmod/errors.hpp"
#include "virmod/invariants.hpp"
#include "virmod/reference/oracles.hpp"

using namespace virmod;

namespace {

bool check_named(const InvariantReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

TEST_CASE("row applicability") {
  CHECK(applicable(CatalogRow::A, 7, 3));
  CHECK(applicable(CatalogRow::D_p_odd, 6, 5));
  CHECK_FALSE(applicable(CatalogRow::D_p_odd, 5, 6));
  CHECK(applicable(CatalogRow::D_q_odd, 5, 6));
  CHECK(applicable(CatalogRow::D_p_even, 8, 5));
  CHECK(applicable(CatalogRow::D_q_even, 5, 8));
  CHECK(applicable(CatalogRow::E6_q12, 12, 11));
  CHECK(applicable(CatalogRow::E6_p12, 13, 12));
  CHECK(applicable(CatalogRow::E7_q18, 18, 5));
  CHECK(applicable(CatalogRow::E8_p30, 31, 30));
  CHECK_FALSE(applicable(CatalogRow::E8_q30, 31, 30));
  CHECK(parse_catalog_row("E6_Q12") == CatalogRow::E6_q12);
  CHECK_FALSE(parse_catalog_row("e9").has_value());
  CHECK(ade_type(CatalogRow::E6_q12, 12, 11) == "(A_10,E_6)");
  CHECK_THROWS_AS(build_catalog(MinimalModel(5, 4), CatalogRow::E6_q12), DomainError);
}

TEST_CASE("catalog examples") {
  const MinimalModel ising(4, 3);
  CHECK(build_catalog(ising, CatalogRow::A) == InvariantMatrix::identity(ising));
  CHECK(build_catalog(ising, CatalogRow::D_p_even) == build_catalog(ising, CatalogRow::A));

  const MinimalModel m(12, 11);
  const InvariantMatrix e6 = build_catalog(m, CatalogRow::E6_q12);
  CHECK(e6(0, 0) == 1);
  CHECK(e6(0, m.index_of({1, 7})) == 1);
  const InvariantMatrix a = build_catalog(m, CatalogRow::A);
  const InvariantMatrix d = build_catalog(m, CatalogRow::D_p_even);
  CHECK_FALSE(a == d);
  CHECK_FALSE(a == e6);
  CHECK_FALSE(d == e6);
  for (const auto* x : {&a, &d, &e6}) CHECK(verify_invariant(*x).all_pass());
}

TEST_CASE("verify reports failures by name") {
  const MinimalModel ising(4, 3);
  InvariantMatrix x = InvariantMatrix::identity(ising);
  x(0, ising.index_of({2, 2})) = 1;
  const InvariantReport rep = verify_invariant(x);
  CHECK(rep.m1);
  CHECK(rep.m2);
  CHECK_FALSE(rep.m3_t);
  CHECK_FALSE(check_named(rep, "M3_T"));

  InvariantMatrix y = InvariantMatrix::identity(ising);
  y(0, 0) = 2;
  CHECK_FALSE(verify_invariant(y).m2);

  const MinimalModel m(6, 5);
  InvariantMatrix z = InvariantMatrix::identity(m);
  z(1, 1) = 2;
  CHECK_FALSE(verify_invariant(z).m3_s);
}

TEST_CASE("every applicable row is an invariant") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 6}, {5, 8}, {6, 5}, {8, 5}, {9, 4}, {10, 7}, {12, 5}, {14, 3}}) {
    const MinimalModel m(p, q);
    for (auto row : applicable_rows(p, q)) {
      CAPTURE(tag(row));
      const InvariantMatrix x = build_catalog(m, row);
      CHECK(verify_invariant(x).all_pass());
      CHECK(x == x.transposed());
    }
  }
}

TEST_CASE("E7 readings") {
  const MinimalModel m(18, 5);
  const InvariantMatrix sym = build_catalog(m, CatalogRow::E7_q18);
  const InvariantMatrix lit = build_catalog(m, CatalogRow::E7_q18, E7Reading::Literal);
  CHECK(verify_invariant(sym).all_pass());
  CHECK(sym == sym.transposed());
  CHECK_FALSE(lit == sym);
  CHECK_FALSE(verify_invariant(lit).m3_s);
}

TEST_CASE("ball path agrees with the exact path") {
  const MinimalModel m(13, 12);
  const InvariantMatrix x = build_catalog(m, CatalogRow::E6_p12);
  const InvariantReport exact = verify_invariant(x, {.exact_pq_limit = 1000});
  const InvariantReport ball = verify_invariant(x, {.exact_pq_limit = 10});
  CHECK(exact.method == "exact");
  CHECK(ball.method == "ball");
  CHECK(exact.all_pass());
  CHECK(ball.all_pass());
  CHECK(ball.max_radius < 1e-40);
  InvariantMatrix bad = x;
  bad(3, 3) += 1;
  CHECK_FALSE(verify_invariant(bad, {.exact_pq_limit = 10}).m3_s);
}

TEST_CASE("commutant dimensions") {
  CHECK(commutant_basis(MinimalModel(4, 3)).size() == 1);
  CHECK(commutant_basis(MinimalModel(5, 2)).size() == 1);
  const MinimalModel m(6, 5);
  const auto basis = commutant_basis(m);
  CHECK(basis.size() >= 2);
  for (const auto& b : basis) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (sgn(b[i * m.size() + j]) != 0) CHECK(is_integer(m.weight(i) - m.weight(j)));
  }
}

TEST_CASE("classification against the brute-force oracle") {
  for (auto [p, q, count] : std::vector<std::tuple<int, int, std::size_t>>{{4, 3, 1}, {5, 2, 1}, {6, 5, 2}}) {
    const MinimalModel m(p, q);
    const ClassifyResult res = classify(m, 4);
    CHECK(res.complete);
    REQUIRE(res.invariants.size() == count);
    CHECK(res.invariants == reference::brute_force_invariants(m, 4));
    CHECK(std::find(res.invariants.begin(), res.invariants.end(), build_catalog(m, CatalogRow::A)) != res.invariants.end());
    for (const auto& x : res.invariants)
      CHECK(std::find(res.invariants.begin(), res.invariants.end(), x.transposed()) != res.invariants.end());
  }
  const MinimalModel m(6, 5);
  const ClassifyResult res = classify(m, 4);
  CHECK(std::find(res.invariants.begin(), res.invariants.end(), build_catalog(m, CatalogRow::D_p_odd)) != res.invariants.end());
}

TEST_CASE("classification reports truncation honestly") {
  const ClassifyResult res = classify(MinimalModel(8, 3), 2);
  CHECK_FALSE(res.complete);
  CHECK(res.commutant_dimension >= 2);
  CHECK_FALSE(res.completeness_reason.empty());
}
