#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "virmod/cyclotomic.hpp"
#include "virmod/modular_data.hpp"

// Hot loops of the toolkit. The parallel kernels accumulate roots of unity
// into group-ring buffers under OpenMP; namespace `reference` keeps the
// straightforward serial versions built on CycNumber arithmetic, used by the
// tests and the benchmark as the comparison baseline.
namespace virmod::kernels {

// (S_hat D S_hat)_{ij} with D = diag(zeta_N^{twist_k}); N a multiple of 2pq.
std::vector<CycNumber> s_twist_s(const SMatrixHat& s, std::span<const long> twist, long conductor);

struct CommutatorResult {
  bool zero = true;
  std::size_t bad_row = 0;
  std::size_t bad_col = 0;
  double max_radius = 0.0;  // ball path only
  std::size_t numeric_entries = 0;  // entries not settled symbolically
};

// X S_hat - S_hat X == 0 exactly over Q(zeta_{2pq}); X dense row-major d x d.
CommutatorResult commutator_exact(const SMatrixHat& s, std::span<const long> x);

// Same test in certified ball arithmetic: an entry passes when its cosine
// combination cancels symbolically or its ball contains zero with radius below
// `radius_limit`.
CommutatorResult commutator_ball(const SMatrixHat& s, std::span<const long> x, int precision, double radius_limit);

}  // namespace virmod::kernels

namespace virmod::kernels::reference {

std::vector<CycNumber> s_twist_s(const SMatrixHat& s, std::span<const long> twist, long conductor);
CommutatorResult commutator_exact(const SMatrixHat& s, std::span<const long> x);

}  // namespace virmod::kernels::reference
