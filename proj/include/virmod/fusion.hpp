#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "virmod/check.hpp"
#include "virmod/minimal_model.hpp"

namespace virmod {

struct FusionTriple {
  KacLabel a;
  KacLabel b;
  KacLabel c;
};

// Truncated-window fusion rule, tried against both fold representatives of c.
int fusion_coeff(const MinimalModel& model, KacLabel a, KacLabel b, KacLabel c);

// Exact Verlinde sum in Q(zeta_{2pq}). Throws ConventionError if the result is
// not a nonnegative rational integer.
long verlinde_coeff(const MinimalModel& model, KacLabel a, KacLabel b, KacLabel c);

// Labels appearing in a x b with nonzero window coefficient, in transversal order.
std::vector<KacLabel> fusion_targets(const MinimalModel& model, KacLabel a, KacLabel b);

struct FusionMismatch {
  FusionTriple triple;
  long window = 0;
  long verlinde = 0;
};

struct FusionTable {
  MinimalModel model;
  std::vector<long> window;    // N[(a*d + b)*d + c]
  std::vector<long> verlinde;
  std::vector<FusionMismatch> mismatches;
  std::vector<CheckResult> checks;

  std::size_t size() const { return model.size(); }
  long operator()(std::size_t a, std::size_t b, std::size_t c) const { return window[(a * size() + b) * size() + c]; }
  std::size_t nonzero_count() const;
  bool all_pass() const { return virmod::all_pass(checks); }
};

// Both methods over all triples, compared entrywise, with the multiplicity
// bound, unit, commutativity and associativity checks attached.
FusionTable fusion_table(const MinimalModel& model);

}  // namespace virmod
