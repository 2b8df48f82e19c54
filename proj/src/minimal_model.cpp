#include "virmod/minimal_model.hpp"

#include <algorithm>
#include <numeric>

#include "virmod/errors.hpp"

namespace virmod {

std::string to_string(const KacLabel& label) {
  return "(" + std::to_string(label.r) + "," + std::to_string(label.s) + ")";
}

namespace {

void validate_pair(int p, int q) {
  if (p < 2 || q < 2)
    throw DomainError("minimal model requires p, q >= 2 (got " + std::to_string(p) + "," + std::to_string(q) + ")");
  if (p == q || std::gcd(p, q) != 1)
    throw DomainError("minimal model requires coprime p != q (got " + std::to_string(p) + "," + std::to_string(q) + ")");
}

}  // namespace

Rational central_charge(int p, int q) {
  validate_pair(p, q);
  const long d = p - q;
  Rational c = 1 - make_rational(6 * d * d, static_cast<long>(p) * q);
  c.canonicalize();
  return c;
}

MinimalModel::MinimalModel(int p, int q) : p_(p), q_(q), c_(virmod::central_charge(p, q)) {
  std::vector<KacLabel> reps;
  for (int r = 1; r <= q_ - 1; ++r)
    for (int s = 1; s <= p_ - 1; ++s) {
      const KacLabel rep = fold(r, s);
      if (rep.r == r && rep.s == s) reps.push_back(rep);
    }
  std::vector<std::pair<Rational, KacLabel>> keyed;
  keyed.reserve(reps.size());
  for (const auto& l : reps) keyed.emplace_back(conformal_weight(l), l);
  // vacuum first, then ascending weight
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const bool va = a.second == KacLabel{1, 1};
    const bool vb = b.second == KacLabel{1, 1};
    if (va != vb) return va;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  for (auto& [h, l] : keyed) {
    transversal_.push_back(l);
    weights_.push_back(h);
  }
  rectangle_index_.assign(static_cast<std::size_t>((q_ - 1) * (p_ - 1)), -1);
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    const auto [r, s] = transversal_[i];
    rectangle_index_[(r - 1) * (p_ - 1) + (s - 1)] = static_cast<int>(i);
    rectangle_index_[(q_ - r - 1) * (p_ - 1) + (p_ - s - 1)] = static_cast<int>(i);
  }
  min_weight_index_ = static_cast<std::size_t>(std::min_element(weights_.begin(), weights_.end()) - weights_.begin());
}

void MinimalModel::check_range(int r, int s) const {
  if (!in_range(r, s))
    throw DomainError("Kac label (" + std::to_string(r) + "," + std::to_string(s) + ") out of range for M(" +
                      std::to_string(p_) + "," + std::to_string(q_) + ")");
}

Rational MinimalModel::conformal_weight(const KacLabel& label) const {
  check_range(label.r, label.s);
  const long u = static_cast<long>(label.r) * p_ - static_cast<long>(label.s) * q_;
  const long d = p_ - q_;
  Rational h = make_rational(u * u - d * d, 4L * p_ * q_);
  return h;
}

KacLabel MinimalModel::fold(int r, int s) const {
  check_range(r, s);
  const KacLabel a{r, s};
  const KacLabel b{q_ - r, p_ - s};
  const bool a_even = (a.r + a.s) % 2 == 0;
  const bool b_even = (b.r + b.s) % 2 == 0;
  if (a_even != b_even) return a_even ? a : b;
  return std::min(a, b);
}

std::size_t MinimalModel::index_of(int r, int s) const {
  check_range(r, s);
  return static_cast<std::size_t>(rectangle_index_[(r - 1) * (p_ - 1) + (s - 1)]);
}

Rational MinimalModel::effective_central_charge() const { return c_ - 24 * weights_[min_weight_index_]; }

Rational conformal_weight(const MinimalModel& model, const KacLabel& label) { return model.conformal_weight(label); }

const std::vector<KacLabel>& kac_transversal(const MinimalModel& model) { return model.transversal(); }

Rational effective_central_charge(const MinimalModel& model) { return model.effective_central_charge(); }

}  // namespace virmod
