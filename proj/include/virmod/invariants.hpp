#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "virmod/check.hpp"
#include "virmod/minimal_model.hpp"
#include "virmod/rational.hpp"

namespace virmod {

// Rows of the ADE classification. D tags follow the row conditions
// literally (D_p_odd: p = 2(2m+1), ...). E tags name the A-partner slot:
// E6_q12 is type (A_{q-1}, E6) and needs p = 12 (exceptional exponents in the
// s slot); E6_p12 is type (E6, A_{p-1}) and needs q = 12. Likewise for E7/E8.
enum class CatalogRow { A, D_q_odd, D_q_even, D_p_odd, D_p_even, E6_p12, E6_q12, E7_p18, E7_q18, E8_p30, E8_q30 };

const std::vector<CatalogRow>& all_catalog_rows();
std::string tag(CatalogRow row);
std::optional<CatalogRow> parse_catalog_row(const std::string& tag);
bool applicable(CatalogRow row, int p, int q);
std::vector<CatalogRow> applicable_rows(int p, int q);
std::string ade_type(CatalogRow row, int p, int q);

// Nonnegative integer matrix over the transversal of `model`.
class InvariantMatrix {
 public:
  explicit InvariantMatrix(const MinimalModel& model);
  InvariantMatrix(const MinimalModel& model, std::vector<long> entries);
  static InvariantMatrix identity(const MinimalModel& model);

  const MinimalModel& model() const { return model_; }
  std::size_t size() const { return model_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return x_[i * size() + j]; }
  long& operator()(std::size_t i, std::size_t j) { return x_[i * size() + j]; }
  const std::vector<long>& entries() const { return x_; }
  InvariantMatrix transposed() const;

  friend bool operator==(const InvariantMatrix& a, const InvariantMatrix& b) {
    return a.model_ == b.model_ && a.x_ == b.x_;
  }
  friend bool operator<(const InvariantMatrix& a, const InvariantMatrix& b) { return a.x_ < b.x_; }

 private:
  MinimalModel model_;
  std::vector<long> x_;
};

// How the E7 cross term Z_{r,9}(v) conj(Z_{r,3}(u) + Z_{r,15}(u)) is read.
enum class E7Reading { Symmetrized, Literal };

// Expands the row's bilinear sum over full-rectangle labels, folds each label
// to the transversal and halves. Throws DomainError if the row does not apply
// and ConventionError if the halved matrix is not a nonnegative integer matrix
// with vacuum entry 1.
InvariantMatrix build_catalog(const MinimalModel& model, CatalogRow row,
                              E7Reading reading = E7Reading::Symmetrized);

struct VerifyOptions {
  int precision = 256;
  // Exact cyclotomic arithmetic up to this pq, certified balls beyond.
  long exact_pq_limit = 150;
  double radius_limit = 1e-40;
};

struct InvariantReport {
  bool m1 = false;  // entries nonnegative integers
  bool m2 = false;  // X_{vac,vac} = 1
  bool m3_t = false;
  bool m3_s = false;
  std::string method;  // "exact" or "ball"
  double max_radius = 0.0;
  std::vector<CheckResult> checks;

  bool all_pass() const { return m1 && m2 && m3_t && m3_s; }
};

InvariantReport verify_invariant(const InvariantMatrix& inv, const VerifyOptions& options = {});

using RationalMatrix = std::vector<Rational>;  // row-major d x d

// Basis of the rational matrices commuting with T and S_hat. The T condition
// is imposed as a sparsity pattern; the S condition is expanded in the power
// basis of Q(zeta_{2pq}) and solved by fraction-free elimination.
std::vector<RationalMatrix> commutant_basis(const MinimalModel& model);

struct ClassifyResult {
  std::vector<InvariantMatrix> invariants;  // sorted, deduplicated
  bool complete = false;
  std::string completeness_reason;
  std::size_t commutant_dimension = 0;
  std::size_t candidates_examined = 0;
};

ClassifyResult classify(const MinimalModel& model, long cap, int precision = 256);

}  // namespace virmod
