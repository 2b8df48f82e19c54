#pragma once

#include <vector>

#include "virmod/invariants.hpp"
#include "virmod/minimal_model.hpp"
#include "virmod/rational.hpp"

// Slow, independent oracles. They share only the label bookkeeping of
// MinimalModel with the main library.
namespace virmod::reference {

// Shapovalov form on the Verma module M(c, h) at `level`, in the basis of
// ordered monomials L_{-n1} ... L_{-nk} v with n1 >= ... >= nk, computed by
// straightening Virasoro commutators.
std::vector<std::vector<Rational>> gram_matrix(const Rational& c, const Rational& h, int level);

long rational_rank(std::vector<std::vector<Rational>> m);

// dim L(c, h)_level for levels 0..max_level, as Gram-matrix ranks.
std::vector<long> graded_dimensions(const Rational& c, const Rational& h, int max_level);

// All matrices X over the transversal with X_vac,vac = 1, entries in [0, cap],
// T-compatible support and X S = S X, where S is built in double precision
// from the sine product formula. Small models are enumerated literally; larger
// ones through a floating-point kernel with free coordinates in [0, cap].
std::vector<InvariantMatrix> brute_force_invariants(const MinimalModel& model, long cap);

}  // namespace virmod::reference
