#pragma once

#include <vector>

#include "virmod/minimal_model.hpp"
#include "virmod/series.hpp"

namespace virmod {

// 1 / prod_{n>=1} (1 - q^n) to the given order (partition numbers).
PuiseuxSeries inverse_euler_product(int order);

// Character q^{h - c/24} (1 + ...) of L(c_{p,q}, h_{r,s}), exact to `order`.
PuiseuxSeries character(const MinimalModel& model, const KacLabel& label, int order);

// Characters of the whole transversal, in transversal order.
std::vector<PuiseuxSeries> all_characters(const MinimalModel& model, int order);

// max_i |chi_i(i) - sum_j S_ij chi_j(i)| at the self-dual point tau = i, with
// S = s0 * S_hat evaluated in double precision.
double s_transform_defect(const MinimalModel& model, int order);

}  // namespace virmod
