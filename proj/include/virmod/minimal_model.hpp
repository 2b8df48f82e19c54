#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "virmod/rational.hpp"

namespace virmod {

// Kac label (r, s) with 1 <= r <= q-1 and 1 <= s <= p-1 for the model (p, q).
struct KacLabel {
  int r = 1;
  int s = 1;

  friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
};

std::string to_string(const KacLabel& label);

// c = 1 - 6 (p-q)^2 / (pq).
Rational central_charge(int p, int q);

// Virasoro minimal model M(p, q): p, q >= 2 coprime. Owns the fold-orbit
// transversal that indexes every matrix and table in the toolkit.
class MinimalModel {
 public:
  MinimalModel(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  const Rational& central_charge() const { return c_; }
  bool is_unitary() const { return p_ - q_ == 1 || q_ - p_ == 1; }

  bool in_range(int r, int s) const { return r >= 1 && r <= q_ - 1 && s >= 1 && s <= p_ - 1; }
  // h = ((rp - sq)^2 - (p-q)^2) / (4pq).
  Rational conformal_weight(const KacLabel& label) const;
  // Canonical member of {(r,s), (q-r, p-s)}: r+s even preferred, then the
  // lexicographically smaller pair.
  KacLabel fold(int r, int s) const;
  KacLabel fold(const KacLabel& label) const { return fold(label.r, label.s); }

  // One label per fold orbit: the vacuum (1, 1) first, then ascending by
  // weight with ties broken by (r, s).
  const std::vector<KacLabel>& transversal() const { return transversal_; }
  std::size_t size() const { return transversal_.size(); }
  const KacLabel& label(std::size_t i) const { return transversal_.at(i); }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  // Transversal index of the orbit containing (r, s).
  std::size_t index_of(int r, int s) const;
  std::size_t index_of(const KacLabel& label) const { return index_of(label.r, label.s); }
  std::size_t vacuum_index() const { return 0; }
  std::size_t min_weight_index() const { return min_weight_index_; }

  // c - 24 h_min.
  Rational effective_central_charge() const;

  friend bool operator==(const MinimalModel& a, const MinimalModel& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  void check_range(int r, int s) const;

  int p_;
  int q_;
  Rational c_;
  std::vector<KacLabel> transversal_;
  std::vector<Rational> weights_;
  std::vector<int> rectangle_index_;  // (r-1)*(p-1) + (s-1) -> transversal index
  std::size_t min_weight_index_ = 0;
};

Rational conformal_weight(const MinimalModel& model, const KacLabel& label);
const std::vector<KacLabel>& kac_transversal(const MinimalModel& model);
Rational effective_central_charge(const MinimalModel& model);

}  // namespace virmod
