#include "virmod/branching.hpp"

#include <numeric>
#include <set>

#include "virmod/characters.hpp"
#include "virmod/errors.hpp"

namespace virmod {

BranchingInstance::BranchingInstance(int p_, int pprime_) : p(p_), pprime(pprime_) {
  if (p < 2 || pprime < 2 || std::gcd(p, pprime) != 1)
    throw DomainError("branching needs coprime p, p' >= 2 (got " + std::to_string(p) + "," + std::to_string(pprime) + ")");
}

Rational BranchingInstance::central_charge_balance() const {
  return central_charge(p + pprime, p) + central_charge(pprime, p + pprime) - central_charge(pprime, p);
}

std::vector<DecompositionTerm> decomposition_list(const BranchingInstance& inst, KacLabel mm) {
  const MinimalModel base = inst.base();
  if (!base.in_range(mm.r, mm.s))
    throw DomainError("label " + to_string(mm) + " is not in the Kac table of (" + std::to_string(inst.pprime) + "," +
                      std::to_string(inst.p) + ")");
  const MinimalModel up = inst.upper();
  const MinimalModel lo = inst.lower();
  std::vector<DecompositionTerm> out;
  const int parity = (mm.r + mm.s - 1) % 2;
  for (int n = 1; n < inst.p + inst.pprime; ++n)
    if (n % 2 == parity) out.push_back({n, up.fold(mm.r, n), lo.fold(n, mm.s)});
  return out;
}

PuiseuxSeries branching_series(const BranchingInstance& inst, KacLabel mm, int order) {
  const MinimalModel up = inst.upper();
  const MinimalModel lo = inst.lower();
  std::optional<PuiseuxSeries> sum;
  for (const auto& term : decomposition_list(inst, mm)) {
    PuiseuxSeries prod = character(up, term.upper, order) * character(lo, term.lower, order);
    sum = sum ? *sum + prod : prod;
  }
  return *sum;
}

CheckResult weight_offset_check(const BranchingInstance& inst, KacLabel mm) {
  const MinimalModel up = inst.upper();
  const MinimalModel lo = inst.lower();
  const Rational h_base = inst.base().conformal_weight(mm);
  std::optional<Rational> first;
  for (const auto& term : decomposition_list(inst, mm)) {
    const Rational shift = up.conformal_weight(term.upper) + lo.conformal_weight(term.lower) - h_base;
    if (!first) {
      first = shift;
    } else if (!is_integer(shift - *first)) {
      return {"weight_offsets_" + to_string(mm), false,
              "term n=" + std::to_string(term.n) + " shifts by " + to_string(shift - *first)};
    }
  }
  return {"weight_offsets_" + to_string(mm), true, "weight offsets agree mod 1, base shift " + to_string(*first)};
}

CheckResult branching_identity_check(const BranchingInstance& inst, KacLabel mm, KacLabel m0, int order) {
  const MinimalModel base = inst.base();
  const std::string name = "branching_" + to_string(mm) + "_vs_" + to_string(m0);
  const PuiseuxSeries lhs = branching_series(inst, mm, order) * character(base, m0, order);
  const PuiseuxSeries rhs = branching_series(inst, m0, order) * character(base, mm, order);
  const bool ok = agree_to_common_order(lhs, rhs);
  return {name, ok,
          ok ? "F chi agree through exponent " + to_string(std::min(lhs.horizon(), rhs.horizon()))
             : "cross-ratio identity fails"};
}

PuiseuxSeries extract_chi_U(const BranchingInstance& inst, int order) {
  const Rational balance = inst.central_charge_balance();
  if (balance != -5) throw ConventionError("central charge balance is " + to_string(balance) + ", expected -5");
  const PuiseuxSeries f = branching_series(inst, {1, 1}, order);
  const PuiseuxSeries chi_u = (f / character(inst.base(), {1, 1}, order)).normalized();
  if (chi_u.offset() != make_rational(5, 24))
    throw ConventionError("chi_U leading exponent is " + to_string(chi_u.offset()) + ", expected 5/24");
  if (!chi_u.nonnegative_integer_coefficients())
    throw ConventionError("chi_U has a coefficient that is not a nonnegative integer");
  return chi_u;
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyInfo {
  ExtensionFamily family;
  const char* tag;
  int fixed;     // 12 or 30
  int residue;   // parameter congruence mod `fixed`
  bool q_slot;   // exceptional exponents in s, parameter is q
  std::vector<int> exponents;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> f = {
      {ExtensionFamily::E6Q, "e6q", 12, 11, true, {1, 7}},
      {ExtensionFamily::E6R, "e6r", 12, 1, false, {1, 7}},
      {ExtensionFamily::E8Q, "e8q", 30, 29, true, {1, 11, 19, 29}},
      {ExtensionFamily::E8R, "e8r", 30, 1, false, {1, 11, 19, 29}},
  };
  return f;
}

const FamilyInfo& info(ExtensionFamily family) {
  for (const auto& f : families())
    if (f.family == family) return f;
  throw DomainError("unknown extension family");
}

}  // namespace

std::string tag(ExtensionFamily family) { return info(family).tag; }

std::optional<ExtensionFamily> parse_family(const std::string& text) {
  for (const auto& f : families())
    if (text == f.tag) return f.family;
  return std::nullopt;
}

int family_parameter(ExtensionFamily family, int k) {
  const auto& f = info(family);
  if (k < 0) throw DomainError("family parameter index must be nonnegative");
  // First admissible value above 1.
  const int first = f.residue == 1 ? f.fixed + 1 : f.residue;
  return first + k * f.fixed;
}

CatalogRow catalog_row(ExtensionFamily family) {
  switch (family) {
    case ExtensionFamily::E6Q:
      return CatalogRow::E6_q12;
    case ExtensionFamily::E6R:
      return CatalogRow::E6_p12;
    case ExtensionFamily::E8Q:
      return CatalogRow::E8_q30;
    case ExtensionFamily::E8R:
      return CatalogRow::E8_p30;
  }
  throw DomainError("unknown extension family");
}

ExtensionDescriptor family_descriptor(ExtensionFamily family, int parameter) {
  const auto& f = info(family);
  if (parameter < 2 || parameter % f.fixed != f.residue)
    throw DomainError(std::string("parameter ") + std::to_string(parameter) + " violates the " + f.tag +
                      " congruence (" + std::to_string(f.residue) + " mod " + std::to_string(f.fixed) + ")");
  const MinimalModel model = f.q_slot ? MinimalModel(f.fixed, parameter) : MinimalModel(parameter, f.fixed);
  ExtensionDescriptor desc{model, family, {}, {}};
  std::set<std::size_t> seen;
  for (int e : f.exponents) {
    const KacLabel label = f.q_slot ? KacLabel{1, e} : KacLabel{e, 1};
    if (!seen.insert(model.index_of(label)).second)
      throw ConventionError("summand " + to_string(label) + " repeats a transversal class");
    desc.summands.push_back(label);
    desc.weights.push_back(model.conformal_weight(label));
  }
  return desc;
}

CheckResult check_integrality(const ExtensionDescriptor& desc) {
  bool ok = true;
  std::string weights;
  for (std::size_t i = 0; i < desc.summands.size(); ++i) {
    const Rational& h = desc.weights[i];
    if (i > 0) {
      ok = ok && is_integer(h) && sgn(h) > 0;
      weights += (i > 1 ? ", " : "") + to_string(desc.summands[i]) + ":" + to_string(h);
    }
  }
  return {"integral_weights", ok, "weights " + weights};
}

PuiseuxSeries extension_character(const ExtensionDescriptor& desc, int order) {
  std::optional<PuiseuxSeries> sum;
  for (const auto& label : desc.summands) {
    const PuiseuxSeries chi = character(desc.model, label, order);
    if (sum && !is_integer(chi.offset() - sum->offset()))
      throw ConventionError("summand " + to_string(label) + " has a non-integral weight");
    sum = sum ? *sum + chi : chi;
  }
  return *sum;
}

InvariantMatrix invariant_of_family(const ExtensionDescriptor& desc, const VerifyOptions& options) {
  const MinimalModel& model = desc.model;
  const InvariantMatrix x = build_catalog(model, catalog_row(desc.family));
  const InvariantReport report = verify_invariant(x, options);
  for (const auto& c : report.checks)
    if (!c.pass) throw ConventionError(tag(desc.family) + " invariant fails " + c.name + ": " + c.detail);
  std::vector<long> expected(model.size(), 0);
  for (const auto& label : desc.summands) expected[model.index_of(label)] = 1;
  const std::size_t vac = model.vacuum_index();
  for (std::size_t j = 0; j < model.size(); ++j)
    if (x(vac, j) != expected[j])
      throw ConventionError("vacuum row entry at " + to_string(model.label(j)) + " is " + std::to_string(x(vac, j)) +
                            ", expected " + std::to_string(expected[j]));
  return x;
}

}  // namespace virmod
