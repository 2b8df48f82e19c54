#pragma once

#include <cstddef>
#include <vector>

#include "virmod/ball.hpp"
#include "virmod/check.hpp"
#include "virmod/cyclotomic.hpp"
#include "virmod/minimal_model.hpp"

namespace virmod {

// S_hat_{ij} = sign/2 * (cos(pi a/(pq)) - cos(pi b/(pq))), the product-to-sum
// form of (-1)^{1+s rho + r sigma} sin(pi p r rho/q) sin(pi q s sigma/p).
struct SEntryTerms {
  int sign = 1;
  long a = 0;  // reduced to [0, pq]
  long b = 0;
};

// Unnormalized S matrix over the transversal. The modular S equals s0 * S_hat
// with s0^2 = 8/(pq); entries lie in (1/4) Z[zeta_{2pq}].
class SMatrixHat {
 public:
  explicit SMatrixHat(const MinimalModel& model);

  const MinimalModel& model() const { return model_; }
  std::size_t size() const { return model_.size(); }
  long pq() const { return static_cast<long>(model_.p()) * model_.q(); }
  long conductor() const { return 2 * pq(); }
  Rational scale_squared() const { return make_rational(8, pq()); }

  const SEntryTerms& terms(std::size_t i, std::size_t j) const { return terms_[i * size() + j]; }
  CycNumber entry(std::size_t i, std::size_t j) const;
  double approx(std::size_t i, std::size_t j) const;

  // acc += weight * 4 S_hat_ij * zeta_N^shift where N = acc.conductor() is a
  // multiple of 2pq.
  void accumulate(RootSum& acc, std::size_t i, std::size_t j, std::int64_t weight, long shift = 0) const;

  // Corrupts one entry (no symmetric partner); used to exercise the checks.
  void flip_sign(std::size_t i, std::size_t j) { terms_[i * size() + j].sign *= -1; }

 private:
  MinimalModel model_;
  std::vector<SEntryTerms> terms_;
};

SMatrixHat build_s_hat(const MinimalModel& model);

// cos(pi k/(pq)) for 0 <= k < 2pq as certified balls.
class CosTable {
 public:
  CosTable(long pq, int precision);
  const Ball& operator[](long k) const;
  long pq() const { return pq_; }
  int precision() const { return precision_; }

 private:
  long pq_;
  int precision_;
  std::vector<Ball> values_;
};

Ball s_hat_ball(const SMatrixHat& s, std::size_t i, std::size_t j, const CosTable& table);

// T = diag(exp(2 pi i k_i / (24pq))), k_i = 6 (r_i p - s_i q)^2 - pq.
struct TMatrix {
  MinimalModel model;
  std::vector<long> exponents;

  long modulus() const { return 24L * model.p() * model.q(); }
  // k_i / (24pq) == h_i - c/24 as an exact rational.
  Rational phase(std::size_t i) const { return make_rational(exponents[i], modulus()); }
};

TMatrix build_t(const MinimalModel& model);

struct ModularReport {
  std::vector<CheckResult> checks;
  bool all_pass() const { return virmod::all_pass(checks); }
};

// Exact checks: S_hat symmetric, S_hat^2 = (pq/8) Id, and the braiding
// relation s0 S T S = T^{-1} S T^{-1} in squared (rational-scalar) form with
// the sign of each nonzero entry certified by ball arithmetic.
ModularReport check_modular_relations(const SMatrixHat& s, const TMatrix& t, int precision = 256);
ModularReport check_modular_relations(const MinimalModel& model, int precision = 256);

// Index of the minimal-weight label; throws ConventionError unless its S_hat
// row is certified strictly positive.
std::size_t effective_vacuum(const SMatrixHat& s, int precision = 256);
std::size_t effective_vacuum(const MinimalModel& model, int precision = 256);

}  // namespace virmod
