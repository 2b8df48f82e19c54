#include <doctest.h>

#include <numeric>

#include "virmod/branching.hpp"
#include "virmod/characters.hpp"
#include "virmod/errors.hpp"

using namespace virmod;

TEST_CASE("decomposition windows") {
  const BranchingInstance inst(3, 2);
  const auto terms = decomposition_list(inst, {1, 1});
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].n == 1);
  CHECK(terms[0].upper == KacLabel{1, 1});
  CHECK(terms[0].lower == KacLabel{1, 1});
  CHECK(terms[1].n == 3);
  CHECK(terms[1].upper == KacLabel{1, 3});
  CHECK(terms[1].lower == KacLabel{3, 1});

  const BranchingInstance i43(4, 3);
  std::vector<int> ns;
  for (const auto& t : decomposition_list(i43, {1, 1})) ns.push_back(t.n);
  CHECK(ns == std::vector<int>{1, 3, 5});
  ns.clear();
  for (const auto& t : decomposition_list(i43, {2, 1})) ns.push_back(t.n);
  CHECK(ns == std::vector<int>{2, 4, 6});
  CHECK_THROWS_AS(decomposition_list(i43, {4, 1}), DomainError);
  CHECK_THROWS_AS(BranchingInstance(4, 2), DomainError);
}

TEST_CASE("central charge balance") {
  CHECK(BranchingInstance(3, 2).central_charge_balance() == -5);
  CHECK(central_charge(7, 4) + central_charge(3, 7) - central_charge(3, 4) == -5);
  for (int p = 2; p < 12; ++p)
    for (int pp = 2; pp < 12; ++pp)
      if (std::gcd(p, pp) == 1) CHECK(BranchingInstance(p, pp).central_charge_balance() == -5);
}

TEST_CASE("branching identity") {
  const BranchingInstance inst(3, 2);
  CHECK(branching_identity_check(inst, {1, 1}, {2, 1}, 20).pass);
  CHECK(branching_identity_check(inst, {1, 1}, {1, 1}, 20).pass);
  const BranchingInstance i43(4, 3);
  const MinimalModel base = i43.base();
  for (const auto& a : base.transversal()) {
    CHECK(weight_offset_check(i43, a).pass);
    CHECK(branching_identity_check(i43, a, {1, 1}, 20).pass);
  }
}

TEST_CASE("chi_U") {
  const PuiseuxSeries a = extract_chi_U(BranchingInstance(3, 2), 10);
  const PuiseuxSeries b = extract_chi_U(BranchingInstance(4, 3), 10);
  const PuiseuxSeries c = extract_chi_U(BranchingInstance(5, 2), 10);
  CHECK(a.offset() == make_rational(5, 24));
  CHECK(agree_to_common_order(a, b));
  CHECK(agree_to_common_order(a, c));
  CHECK(a.nonnegative_integer_coefficients());
}

TEST_CASE("family descriptors") {
  const auto e6 = family_descriptor(ExtensionFamily::E6Q, 11);
  CHECK(e6.model == MinimalModel(12, 11));
  CHECK(e6.weights == std::vector<Rational>{0, 8});
  CHECK(family_descriptor(ExtensionFamily::E6R, 13).weights == std::vector<Rational>{0, 10});
  CHECK(family_descriptor(ExtensionFamily::E8Q, 29).weights == std::vector<Rational>{0, 24, 78, 189});
  CHECK(family_descriptor(ExtensionFamily::E8R, 31).weights == std::vector<Rational>{0, 26, 84, 203});
  CHECK(family_descriptor(ExtensionFamily::E6Q, 23).weights[1] == 20);
  CHECK_THROWS_AS(family_descriptor(ExtensionFamily::E6Q, 13), DomainError);
  CHECK_THROWS_AS(family_descriptor(ExtensionFamily::E8R, 30), DomainError);
  CHECK(family_parameter(ExtensionFamily::E6Q, 2) == 35);
  CHECK(family_parameter(ExtensionFamily::E8R, 1) == 61);
  CHECK(parse_family("e8q") == ExtensionFamily::E8Q);
}

TEST_CASE("integrality and characters") {
  const auto desc = family_descriptor(ExtensionFamily::E6Q, 11);
  CHECK(check_integrality(desc).pass);
  const PuiseuxSeries chi = extension_character(desc, 12);
  const MinimalModel& m = desc.model;
  CHECK(chi.offset() == make_rational(-7, 176));
  CHECK(chi.coefficient_at(make_rational(-7, 176)) == 1);
  CHECK(chi.coefficient_at(make_rational(-7, 176) + 1) == 0);
  CHECK(chi == character(m, {1, 1}, 12) + character(m, {1, 7}, 12));
  CHECK(chi.nonnegative_integer_coefficients());

  ExtensionDescriptor broken = desc;
  broken.summands[1] = {1, 5};
  broken.weights[1] = m.conformal_weight({1, 5});
  CHECK_FALSE(check_integrality(broken).pass);
  CHECK_THROWS_AS(extension_character(broken, 5), ConventionError);
}

TEST_CASE("invariants of the families") {
  for (auto family : {ExtensionFamily::E6Q, ExtensionFamily::E6R, ExtensionFamily::E8Q, ExtensionFamily::E8R}) {
    const auto desc = family_descriptor(family, family_parameter(family, 0));
    const InvariantMatrix x = invariant_of_family(desc);
    for (const auto& l : desc.summands) CHECK(x(0, desc.model.index_of(l)) == 1);
  }
  auto wrong = family_descriptor(ExtensionFamily::E6Q, 11);
  wrong.summands.pop_back();
  CHECK_THROWS_AS(invariant_of_family(wrong), ConventionError);
}
