#include "virmod/modular_data.hpp"

#include <cmath>
#include <numbers>

#include "virmod/errors.hpp"
#include "virmod/kernels.hpp"

namespace virmod {

namespace {

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// cos(pi k / pq) depends only on k mod 2pq up to k -> -k.
long fold_cos_index(long k, long pq) {
  k = mod_floor(k, 2 * pq);
  return k > pq ? 2 * pq - k : k;
}

SEntryTerms compute_terms(long p, long q, long r, long s, long rho, long sigma) {
  const long pq = p * q;
  const long n = 2 * pq;
  SEntryTerms t;
  t.sign = (1 + s * rho + r * sigma) % 2 == 0 ? 1 : -1;
  const long x = mod_floor(mod_floor(p * p, n) * mod_floor(r * rho, n), n);
  const long y = mod_floor(mod_floor(q * q, n) * mod_floor(s * sigma, n), n);
  t.a = fold_cos_index(x - y, pq);
  t.b = fold_cos_index(x + y, pq);
  return t;
}

double terms_value(const SEntryTerms& t, long pq) {
  const double scale = std::numbers::pi / static_cast<double>(pq);
  return 0.5 * t.sign * (std::cos(scale * t.a) - std::cos(scale * t.b));
}

}  // namespace

SMatrixHat::SMatrixHat(const MinimalModel& model) : model_(model) {
  const long p = model_.p();
  const long q = model_.q();
  const std::size_t d = model_.size();
  terms_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto [r, s] = model_.label(i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto [rho, sigma] = model_.label(j);
      const SEntryTerms t = compute_terms(p, q, r, s, rho, sigma);
      // The entry must not depend on the orbit representative of the row.
      const SEntryTerms partner = compute_terms(p, q, q - r, p - s, rho, sigma);
      const double v = terms_value(t, pq());
      const double w = terms_value(partner, pq());
      if (std::abs(v - w) > 1e-9 * (1.0 + std::abs(v)))
        throw ConventionError("S_hat is not orbit invariant at " + to_string(model_.label(i)) + "," +
                              to_string(model_.label(j)));
      terms_[i * d + j] = t;
    }
  }
}

CycNumber SMatrixHat::entry(std::size_t i, std::size_t j) const {
  RootSum acc(conductor(), 4);
  accumulate(acc, i, j, 1);
  return acc.reduce();
}

double SMatrixHat::approx(std::size_t i, std::size_t j) const { return terms_value(terms(i, j), pq()); }

void SMatrixHat::accumulate(RootSum& acc, std::size_t i, std::size_t j, std::int64_t weight, long shift) const {
  const long n = acc.conductor();
  if (n % conductor() != 0) throw DomainError("accumulator conductor must be a multiple of 2pq");
  const long m = n / conductor();
  const SEntryTerms& t = terms(i, j);
  const std::int64_t w = t.sign * weight;
  acc.add(m * t.a + shift, w);
  acc.add(-m * t.a + shift, w);
  acc.add(m * t.b + shift, -w);
  acc.add(-m * t.b + shift, -w);
}

SMatrixHat build_s_hat(const MinimalModel& model) { return SMatrixHat(model); }

CosTable::CosTable(long pq, int precision) : pq_(pq), precision_(precision) {
  values_.reserve(static_cast<std::size_t>(pq + 1));
  for (long k = 0; k <= pq; ++k) values_.push_back(Ball::cos_pi(k, pq, precision));
}

const Ball& CosTable::operator[](long k) const { return values_[fold_cos_index(k, pq_)]; }

Ball s_hat_ball(const SMatrixHat& s, std::size_t i, std::size_t j, const CosTable& table) {
  const SEntryTerms& t = s.terms(i, j);
  Ball v = table[t.a] - table[t.b];
  v.scale_2exp(-1);
  return t.sign < 0 ? -v : v;
}

TMatrix build_t(const MinimalModel& model) {
  TMatrix t{model, {}};
  const long p = model.p();
  const long q = model.q();
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto [r, s] = model.label(i);
    const long u = r * p - s * q;
    t.exponents.push_back(6 * u * u - p * q);
    if (t.phase(i) - (model.weight(i) - model.central_charge() / 24) != 0)
      throw ConventionError("T exponent disagrees with h - c/24 at " + to_string(model.label(i)));
  }
  return t;
}

ModularReport check_modular_relations(const SMatrixHat& s, const TMatrix& t, int precision) {
  const MinimalModel& model = s.model();
  const std::size_t d = s.size();
  const long pq = s.pq();
  ModularReport report;

  {
    CheckResult c{"S_symmetric", true, ""};
    for (std::size_t i = 0; i < d && c.pass; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        RootSum acc(s.conductor(), 4);
        s.accumulate(acc, i, j, 1);
        s.accumulate(acc, j, i, -1);
        if (!acc.reduces_to_zero()) {
          c.pass = false;
          c.detail = "S_hat" + to_string(model.label(i)) + to_string(model.label(j)) + " != transpose";
          break;
        }
      }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"S_squared", true, ""};
    const std::vector<long> zero(d, 0);
    const auto square = kernels::s_twist_s(s, zero, s.conductor());
    const CycNumber diag(s.conductor(), make_rational(pq, 8));
    const CycNumber off(s.conductor());
    for (std::size_t i = 0; i < d && c.pass; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!(square[i * d + j] == (i == j ? diag : off))) {
          c.pass = false;
          c.detail = "(S_hat^2) entry " + to_string(model.label(i)) + "," + to_string(model.label(j)) +
                     " != (pq/8) delta";
          break;
        }
    report.checks.push_back(c);
  }

  {
    // T = zeta_24^{-1} T' with T'_k = zeta_{4pq}^{u_k^2}, u = rp - sq.
    const long n = 4 * pq;
    std::vector<long> twist(d);
    for (std::size_t k = 0; k < d; ++k) {
      const long u = static_cast<long>(model.label(k).r) * model.p() - static_cast<long>(model.label(k).s) * model.q();
      twist[k] = mod_floor(u * u, n);
      if (mod_floor(t.exponents[k] + pq, 24 * pq) != mod_floor(6 * u * u, 24 * pq))
        throw ConventionError("T exponents inconsistent with the model labels");
    }
    const auto lhs = kernels::s_twist_s(s, twist, n);
    const CycNumber zeta4 = cyc_root_power(n, pq);
    const Rational scale = make_rational(pq, 8);
    const Ball s0 = Ball::sqrt(s.scale_squared(), precision);
    const ComplexBall zeta8{Ball::cos_pi(1, 4, precision), Ball::sin_pi(1, 4, precision)};
    const ComplexBall s0c{s0, Ball(precision)};

    CheckResult squared{"braiding_squared", true, ""};
    CheckResult sign{"braiding_sign", true, ""};
    std::size_t certified = 0;
    RootSum acc(n, 4);
    for (std::size_t i = 0; i < d && squared.pass; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        acc.clear();
        s.accumulate(acc, i, j, 1, -twist[i] - twist[j]);
        const CycNumber rhs = acc.reduce();
        const CycNumber& a = lhs[i * d + j];
        if (!(a * a == rhs * rhs * zeta4 * scale)) {
          squared.pass = false;
          squared.detail = "entry " + to_string(model.label(i)) + "," + to_string(model.label(j));
          break;
        }
        if (rhs.is_zero() || !sign.pass) continue;
        const ComplexBall left = s0c * float_approx(a, precision);
        const ComplexBall right = zeta8 * float_approx(rhs, precision);
        if ((left + right).contains_zero() || !(left - right).contains_zero()) {
          sign.pass = false;
          sign.detail = "sign of entry " + to_string(model.label(i)) + "," + to_string(model.label(j));
        } else {
          ++certified;
        }
      }
    if (squared.pass && sign.pass) sign.detail = std::to_string(certified) + " nonzero entries certified";
    if (!squared.pass) sign.pass = false;
    report.checks.push_back(squared);
    report.checks.push_back(sign);
  }
  return report;
}

ModularReport check_modular_relations(const MinimalModel& model, int precision) {
  return check_modular_relations(build_s_hat(model), build_t(model), precision);
}

std::size_t effective_vacuum(const SMatrixHat& s, int precision) {
  const std::size_t o = s.model().min_weight_index();
  const CosTable table(s.pq(), precision);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!s_hat_ball(s, o, j, table).is_positive())
      throw ConventionError("S_hat row of the effective vacuum " + to_string(s.model().label(o)) +
                            " is not positive at " + to_string(s.model().label(j)));
  }
  return o;
}

std::size_t effective_vacuum(const MinimalModel& model, int precision) {
  return effective_vacuum(build_s_hat(model), precision);
}

}  // namespace virmod
