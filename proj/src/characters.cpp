#include "virmod/characters.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

#include "virmod/errors.hpp"
#include "virmod/modular_data.hpp"

namespace virmod {

PuiseuxSeries inverse_euler_product(int order) {
  // p(n) by the pentagonal recurrence.
  std::vector<Integer> part(static_cast<std::size_t>(order + 1), 0);
  part[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * part[n - g1];
      if (g2 <= n) sum += sign * part[n - g2];
    }
    part[n] = sum;
  }
  std::vector<Rational> coeffs(part.begin(), part.end());
  return PuiseuxSeries(Rational(0), std::move(coeffs), order);
}

PuiseuxSeries character(const MinimalModel& model, const KacLabel& label, int order) {
  if (order < 0) throw DomainError("character order must be nonnegative");
  const Rational h = model.conformal_weight(label);
  const long p = model.p();
  const long q = model.q();
  const long pq = p * q;
  const long u = label.r * p - label.s * q;
  const long v = label.r * p + label.s * q;

  // Numerator sum_k q^{pq k^2 + k u} - q^{rs + pq k^2 + k v}, relative to
  // q^{u^2/(4pq)}. Since |u| < pq and v < 2pq both exponents are at least
  // pq |k| (|k| - 2), which bounds the k range exactly.
  std::vector<Rational> numerator(static_cast<std::size_t>(order + 1), 0);
  std::vector<long> ks{0};
  for (long kk = 1; pq * kk * (kk - 2) <= order; ++kk) {
    ks.push_back(kk);
    ks.push_back(-kk);
  }
  for (const long k : ks) {
    const long e1 = pq * k * k + k * u;
    const long e2 = static_cast<long>(label.r) * label.s + pq * k * k + k * v;
    if (e1 < 0 || e2 < 0) throw ConventionError("negative exponent in the character numerator");
    if (e1 <= order) numerator[e1] += 1;
    if (e2 <= order) numerator[e2] -= 1;
  }
  const Rational offset = make_rational(u * u, 4 * pq) - make_rational(1, 24);
  if (offset != h - model.central_charge() / 24)
    throw ConventionError("character offset differs from h - c/24 at " + to_string(label));
  PuiseuxSeries chi = PuiseuxSeries(offset, std::move(numerator), order) * inverse_euler_product(order);
  if (chi.coeff(0) != 1) throw ConventionError("character leading coefficient is not 1");
  return chi;
}

std::vector<PuiseuxSeries> all_characters(const MinimalModel& model, int order) {
  std::vector<PuiseuxSeries> out(model.size());
  const auto d = static_cast<long>(model.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < d; ++i) out[i] = character(model, model.label(i), order);
  return out;
}

double s_transform_defect(const MinimalModel& model, int order) {
  const auto chars = all_characters(model, order);
  const long double qv = std::exp(-2.0L * std::numbers::pi_v<long double>);
  std::vector<long double> values;
  for (const auto& c : chars) values.push_back(c.evaluate(qv));
  const SMatrixHat s(model);
  const long double s0 = std::sqrt(static_cast<long double>(8.0) / static_cast<long double>(s.pq()));
  double worst = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    long double transformed = 0;
    for (std::size_t j = 0; j < model.size(); ++j) transformed += s0 * s.approx(i, j) * values[j];
    worst = std::max(worst, static_cast<double>(std::fabs(values[i] - transformed)));
  }
  return worst;
}

}  // namespace virmod
