#include "virmod/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <utility>

#include "virmod/errors.hpp"

namespace virmod::kernels {

namespace {

struct RootTerm {
  long exponent;
  std::int64_t coeff;
};

// 4 S_hat_ij as four signed roots of zeta_N.
void expand(const SEntryTerms& t, long m, RootTerm out[4]) {
  out[0] = {m * t.a, t.sign};
  out[1] = {-m * t.a, t.sign};
  out[2] = {m * t.b, -t.sign};
  out[3] = {-m * t.b, -t.sign};
}

struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, long>>> rows;
  std::vector<std::vector<std::pair<std::size_t, long>>> cols;
};

SparseRows sparsify(std::span<const long> x, std::size_t d) {
  if (x.size() != d * d) throw DomainError("matrix size does not match the transversal");
  SparseRows sp;
  sp.rows.resize(d);
  sp.cols.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (const long v = x[i * d + j]; v != 0) {
        sp.rows[i].emplace_back(j, v);
        sp.cols[j].emplace_back(i, v);
      }
  return sp;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

std::vector<CycNumber> s_twist_s(const SMatrixHat& s, std::span<const long> twist, long conductor) {
  const std::size_t d = s.size();
  if (twist.size() != d) throw DomainError("twist length must equal the transversal size");
  if (conductor % s.conductor() != 0) throw DomainError("conductor must be a multiple of 2pq");
  const long m = conductor / s.conductor();
  std::vector<CycNumber> out(d * d);
  const auto total = static_cast<long>(d * d);

#pragma omp parallel
  {
    RootSum acc(conductor, 16);
    RootTerm left[4], right[4];
#pragma omp for schedule(dynamic, 8)
    for (long idx = 0; idx < total; ++idx) {
      const std::size_t i = static_cast<std::size_t>(idx) / d;
      const std::size_t j = static_cast<std::size_t>(idx) % d;
      acc.clear();
      for (std::size_t k = 0; k < d; ++k) {
        expand(s.terms(i, k), m, left);
        expand(s.terms(k, j), m, right);
        for (const auto& l : left)
          for (const auto& r : right) acc.add(l.exponent + r.exponent + twist[k], l.coeff * r.coeff);
      }
      out[idx] = acc.reduce();
    }
  }
  return out;
}

CommutatorResult commutator_exact(const SMatrixHat& s, std::span<const long> x) {
  const std::size_t d = s.size();
  const SparseRows sp = sparsify(x, d);
  const auto total = static_cast<long>(d * d);
  std::size_t first_bad = kNone;

#pragma omp parallel
  {
    RootSum acc(s.conductor(), 4);
    std::size_t local_bad = kNone;
#pragma omp for schedule(dynamic, 16)
    for (long idx = 0; idx < total; ++idx) {
      const std::size_t i = static_cast<std::size_t>(idx) / d;
      const std::size_t j = static_cast<std::size_t>(idx) % d;
      acc.clear();
      for (const auto& [k, v] : sp.rows[i]) s.accumulate(acc, k, j, v);
      for (const auto& [k, v] : sp.cols[j]) s.accumulate(acc, i, k, -v);
      if (!acc.reduces_to_zero()) local_bad = std::min(local_bad, static_cast<std::size_t>(idx));
    }
#pragma omp critical
    first_bad = std::min(first_bad, local_bad);
  }

  CommutatorResult result;
  if (first_bad != kNone) {
    result.zero = false;
    result.bad_row = first_bad / d;
    result.bad_col = first_bad % d;
  }
  return result;
}

CommutatorResult commutator_ball(const SMatrixHat& s, std::span<const long> x, int precision, double radius_limit) {
  const std::size_t d = s.size();
  const SparseRows sp = sparsify(x, d);
  const CosTable table(s.pq(), precision);
  const auto total = static_cast<long>(d * d);
  std::size_t first_bad = kNone;
  double max_radius = 0.0;
  std::size_t numeric = 0;

#pragma omp parallel
  {
    std::vector<std::pair<long, long>> combo;  // (cos index, coefficient), value = sum/2
    BigFloat scratch(precision);
    Ball acc(precision);
    std::size_t local_bad = kNone;
    double local_radius = 0.0;
    std::size_t local_numeric = 0;
    auto push = [&](const SEntryTerms& t, long w) {
      combo.emplace_back(t.a, t.sign * w);
      combo.emplace_back(t.b, -t.sign * w);
    };
#pragma omp for schedule(dynamic, 64)
    for (long idx = 0; idx < total; ++idx) {
      const std::size_t i = static_cast<std::size_t>(idx) / d;
      const std::size_t j = static_cast<std::size_t>(idx) % d;
      combo.clear();
      for (const auto& [k, v] : sp.rows[i]) push(s.terms(k, j), v);
      for (const auto& [k, v] : sp.cols[j]) push(s.terms(i, k), -v);
      std::sort(combo.begin(), combo.end());
      std::size_t w = 0;
      for (std::size_t r = 0; r < combo.size(); ++r) {
        if (w > 0 && combo[w - 1].first == combo[r].first)
          combo[w - 1].second += combo[r].second;
        else
          combo[w++] = combo[r];
      }
      combo.resize(w);
      std::erase_if(combo, [](const auto& e) { return e.second == 0; });
      if (combo.empty()) continue;

      ++local_numeric;
      acc = Ball(precision);
      for (const auto& [k, c] : combo) acc.add_scaled(table[k], c, scratch);
      acc.scale_2exp(-1);
      local_radius = std::max(local_radius, acc.radius());
      if (!acc.contains_zero() || acc.radius() >= radius_limit)
        local_bad = std::min(local_bad, static_cast<std::size_t>(idx));
    }
#pragma omp critical
    {
      first_bad = std::min(first_bad, local_bad);
      max_radius = std::max(max_radius, local_radius);
      numeric += local_numeric;
    }
  }

  CommutatorResult result;
  result.max_radius = max_radius;
  result.numeric_entries = numeric;
  if (first_bad != kNone) {
    result.zero = false;
    result.bad_row = first_bad / d;
    result.bad_col = first_bad % d;
  }
  return result;
}

namespace reference {

std::vector<CycNumber> s_twist_s(const SMatrixHat& s, std::span<const long> twist, long conductor) {
  const std::size_t d = s.size();
  std::vector<CycNumber> entries;
  entries.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) entries.push_back(s.entry(i, j).embed(conductor));
  std::vector<CycNumber> out;
  out.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CycNumber sum(conductor);
      for (std::size_t k = 0; k < d; ++k)
        sum += entries[i * d + k] * cyc_root_power(conductor, twist[k]) * entries[k * d + j];
      out.push_back(std::move(sum));
    }
  return out;
}

CommutatorResult commutator_exact(const SMatrixHat& s, std::span<const long> x) {
  const std::size_t d = s.size();
  if (x.size() != d * d) throw DomainError("matrix size does not match the transversal");
  std::vector<CycNumber> entries;
  entries.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) entries.push_back(s.entry(i, j));
  CommutatorResult result;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CycNumber diff(s.conductor());
      for (std::size_t k = 0; k < d; ++k) {
        if (x[i * d + k] != 0) diff += entries[k * d + j] * Rational(x[i * d + k]);
        if (x[k * d + j] != 0) diff -= entries[i * d + k] * Rational(x[k * d + j]);
      }
      if (!diff.is_zero()) {
        result.zero = false;
        result.bad_row = i;
        result.bad_col = j;
        return result;
      }
    }
  return result;
}

}  // namespace reference

}  // namespace virmod::kernels
