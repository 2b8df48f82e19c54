#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <set>

#include "virmod/errors.hpp"
#include "virmod/reference/oracles.hpp"

namespace virmod::reference {

namespace {

constexpr double kTol = 1e-9;

Eigen::MatrixXd sine_s_matrix(const MinimalModel& model) {
  const int p = model.p();
  const int q = model.q();
  const auto d = static_cast<Eigen::Index>(model.size());
  Eigen::MatrixXd s(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto [r, s1] = model.label(static_cast<std::size_t>(i));
      const auto [rho, sigma] = model.label(static_cast<std::size_t>(j));
      const double sign = ((1 + s1 * rho + r * sigma) % 2 == 0) ? 1.0 : -1.0;
      s(i, j) = sign * std::sin(std::numbers::pi * p * r * rho / q) * std::sin(std::numbers::pi * q * s1 * sigma / p);
    }
  return s;
}

double commutator_norm(const Eigen::MatrixXd& x, const Eigen::MatrixXd& s) {
  return (x * s - s * x).cwiseAbs().maxCoeff();
}

struct Entry {
  Eigen::Index row;
  Eigen::Index col;
};

}  // namespace

std::vector<InvariantMatrix> brute_force_invariants(const MinimalModel& model, long cap) {
  const int p = model.p();
  const int q = model.q();
  const auto d = static_cast<Eigen::Index>(model.size());
  const Eigen::MatrixXd s = sine_s_matrix(model);

  std::vector<Entry> free_entries;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i == 0 && j == 0) continue;
      const auto [ri, si] = model.label(static_cast<std::size_t>(i));
      const auto [rj, sj] = model.label(static_cast<std::size_t>(j));
      const long ui = static_cast<long>(ri) * p - static_cast<long>(si) * q;
      const long uj = static_cast<long>(rj) * p - static_cast<long>(sj) * q;
      if ((ui * ui - uj * uj) % (4L * p * q) == 0) free_entries.push_back({i, j});
    }

  std::set<std::vector<long>> found;
  auto accept = [&](const Eigen::MatrixXd& x) {
    if (commutator_norm(x, s) > kTol) return;
    std::vector<long> e(static_cast<std::size_t>(d * d));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) e[static_cast<std::size_t>(i * d + j)] = std::lround(x(i, j));
    found.insert(e);
  };

  const double literal_space = std::pow(static_cast<double>(cap + 1), static_cast<double>(free_entries.size()));
  if (literal_space <= 5e6) {
    std::vector<long> val(free_entries.size(), 0);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
    x(0, 0) = 1;
    while (true) {
      for (std::size_t k = 0; k < val.size(); ++k) x(free_entries[k].row, free_entries[k].col) = val[k];
      accept(x);
      std::size_t k = 0;
      while (k < val.size() && val[k] == cap) val[k++] = 0;
      if (k == val.size()) break;
      ++val[k];
    }
  } else {
    // Unknowns: the allowed entries, then X_00.
    std::vector<Entry> unknowns = free_entries;
    unknowns.push_back({0, 0});
    const auto n = static_cast<Eigen::Index>(unknowns.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d * d, n);
    for (Eigen::Index u = 0; u < n; ++u) {
      const auto [ra, cb] = unknowns[static_cast<std::size_t>(u)];
      for (Eigen::Index j = 0; j < d; ++j) a(ra * d + j, u) += s(cb, j);
      for (Eigen::Index i = 0; i < d; ++i) a(i * d + cb, u) -= s(i, ra);
    }
    const Eigen::Index lu_rank = Eigen::FullPivLU<Eigen::MatrixXd>(a).setThreshold(kTol).rank();

    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < a.rows(); ++c) {
      Eigen::Index best;
      const double mag = a.col(c).segment(r, a.rows() - r).cwiseAbs().maxCoeff(&best);
      if (mag < kTol) continue;
      a.row(r).swap(a.row(r + best));
      a.row(r) /= a(r, c);
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (i != r && a(i, c) != 0.0) a.row(i) -= a(i, c) * a.row(r);
      pivots.push_back(c);
      ++r;
    }
    if (r != lu_rank) throw ConventionError("brute-force oracle: elimination rank disagrees with full-pivot LU");

    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0, k = 0; c < n; ++c) {
      if (k < static_cast<Eigen::Index>(pivots.size()) && pivots[static_cast<std::size_t>(k)] == c) {
        ++k;
        continue;
      }
      free_cols.push_back(c);
    }
    std::vector<long> lo(free_cols.size(), 0), hi(free_cols.size(), cap);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      if (free_cols[k] == n - 1) lo[k] = hi[k] = 1;
    std::vector<long> val = lo;
    Eigen::MatrixXd x(d, d);
    while (true) {
      x.setZero();
      bool ok = true;
      for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const auto& e = unknowns[static_cast<std::size_t>(free_cols[k])];
        x(e.row, e.col) = static_cast<double>(val[k]);
      }
      for (std::size_t k = 0; k < pivots.size() && ok; ++k) {
        double v = 0;
        for (std::size_t f = 0; f < free_cols.size(); ++f) v -= a(static_cast<Eigen::Index>(k), free_cols[f]) * val[f];
        const double rounded = std::round(v);
        if (std::abs(v - rounded) > 1e-6 || rounded < 0 || rounded > cap) ok = false;
        const auto& e = unknowns[static_cast<std::size_t>(pivots[k])];
        x(e.row, e.col) = rounded;
      }
      if (ok && x(0, 0) == 1.0) accept(x);
      std::size_t k = 0;
      while (k < val.size() && val[k] == hi[k]) {
        val[k] = lo[k];
        ++k;
      }
      if (k == val.size()) break;
      ++val[k];
    }
  }

  std::vector<InvariantMatrix> out;
  for (const auto& e : found) out.emplace_back(model, e);
  return out;
}

}  // namespace virmod::reference
