#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virmod/check.hpp"
#include "virmod/invariants.hpp"
#include "virmod/minimal_model.hpp"
#include "virmod/series.hpp"

namespace virmod {

// The triple of models (p+p', p), (p', p+p') and (p', p) attached to a coprime
// pair (p, p').
struct BranchingInstance {
  int p;
  int pprime;

  BranchingInstance(int p, int pprime);
  MinimalModel upper() const { return MinimalModel(p + pprime, p); }
  MinimalModel lower() const { return MinimalModel(pprime, p + pprime); }
  MinimalModel base() const { return MinimalModel(pprime, p); }
  // c_{p+p',p} + c_{p',p+p'} - c_{p',p}; equals -5 for every pair.
  Rational central_charge_balance() const;
};

struct DecompositionTerm {
  int n;
  KacLabel upper;  // (m, n) of (p+p', p), folded
  KacLabel lower;  // (n, m') of (p', p+p'), folded
};

// Terms 0 < n < p+p' with n = m+m'-1 mod 2 for the label (m, m') of (p', p).
std::vector<DecompositionTerm> decomposition_list(const BranchingInstance& inst, KacLabel mm);

// sum_n chi^{p+p',p}_{m,n} chi^{p',p+p'}_{n,m'} to the given order.
PuiseuxSeries branching_series(const BranchingInstance& inst, KacLabel mm, int order);

// h_upper + h_lower - h_base differs across the terms only by integers.
CheckResult weight_offset_check(const BranchingInstance& inst, KacLabel mm);

// F_{mm} chi_{m0} = F_{m0} chi_{mm} on the common trusted range.
CheckResult branching_identity_check(const BranchingInstance& inst, KacLabel mm, KacLabel m0, int order);

// chi_U = F_{1,1} / chi^{p',p}_{1,1}. Throws ConventionError unless the
// central-charge balance is -5, the leading exponent is 5/24 and the
// coefficients are nonnegative integers.
PuiseuxSeries extract_chi_U(const BranchingInstance& inst, int order);

enum class ExtensionFamily { E6Q, E6R, E8Q, E8R };

std::string tag(ExtensionFamily family);
std::optional<ExtensionFamily> parse_family(const std::string& text);
// The k-th admissible parameter (k = 0, 1, ...): q = 11, 23, ... for E6Q and
// so on.
int family_parameter(ExtensionFamily family, int k);
CatalogRow catalog_row(ExtensionFamily family);

struct ExtensionDescriptor {
  MinimalModel model;
  ExtensionFamily family;
  std::vector<KacLabel> summands;  // vacuum first
  std::vector<Rational> weights;
};

// Throws DomainError when the parameter violates the family congruence.
ExtensionDescriptor family_descriptor(ExtensionFamily family, int parameter);

// Every non-vacuum weight is a positive integer.
CheckResult check_integrality(const ExtensionDescriptor& desc);

// Sum of the summand characters; throws ConventionError on incongruent
// offsets.
PuiseuxSeries extension_character(const ExtensionDescriptor& desc, int order);

// Catalog matrix of the family's row after checking that it is a modular
// invariant and that its vacuum row is the indicator of the summands. Throws
// ConventionError naming the offending entry otherwise.
InvariantMatrix invariant_of_family(const ExtensionDescriptor& desc, const VerifyOptions& options = {});

}  // namespace virmod
