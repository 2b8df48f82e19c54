#include "virmod/series.hpp"

#include <algorithm>
#include <cmath>

#include "virmod/errors.hpp"

namespace virmod {

namespace {

// offset difference a - b as an integer; DomainError if not integral.
long integral_shift(const Rational& a, const Rational& b, const char* what) {
  const Rational diff = a - b;
  if (!is_integer(diff))
    throw DomainError(std::string(what) + ": offsets " + to_string(a) + " and " + to_string(b) +
                      " are not congruent mod 1");
  return diff.get_num().get_si();
}

PuiseuxSeries combine(const PuiseuxSeries& a, const PuiseuxSeries& b, int sign, const char* what) {
  const long shift = integral_shift(b.offset(), a.offset(), what);
  const Rational offset = shift >= 0 ? a.offset() : b.offset();
  const long a_start = shift >= 0 ? 0 : -shift;
  const long b_start = shift >= 0 ? shift : 0;
  const long order = std::min(a_start + a.order(), b_start + b.order());
  std::vector<Rational> coeffs(static_cast<std::size_t>(order + 1), 0);
  for (long n = 0; n <= order; ++n) {
    if (n >= a_start) coeffs[n] += a.coeff(static_cast<int>(n - a_start));
    if (n >= b_start) coeffs[n] += sign * b.coeff(static_cast<int>(n - b_start));
  }
  return PuiseuxSeries(offset, std::move(coeffs), static_cast<int>(order));
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Rational offset, std::vector<Rational> coeffs, int order)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)), order_(order) {
  if (order_ < 0) throw DomainError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order_ + 1), 0);
}

PuiseuxSeries PuiseuxSeries::one(int order) { return monomial(Rational(0), Rational(1), order); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exponent, const Rational& coeff, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), 0);
  c[0] = coeff;
  return PuiseuxSeries(exponent, std::move(c), order);
}

Rational PuiseuxSeries::coefficient_at(const Rational& exponent) const {
  const long n = integral_shift(exponent, offset_, "coefficient_at");
  if (n < 0) return Rational(0);
  if (n > order_) throw DomainError("exponent " + to_string(exponent) + " beyond the trusted order");
  return coeffs_[static_cast<std::size_t>(n)];
}

bool PuiseuxSeries::nonnegative_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0 && is_integer(c); });
}

bool PuiseuxSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PuiseuxSeries PuiseuxSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot extend a series past its trusted order");
  return PuiseuxSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PuiseuxSeries PuiseuxSeries::normalized() const {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0 || lead == coeffs_.size()) return *this;
  return PuiseuxSeries(offset_ + static_cast<long>(lead), std::vector<Rational>(coeffs_.begin() + lead, coeffs_.end()),
                       order_ - static_cast<int>(lead));
}

long double PuiseuxSeries::evaluate(long double q) const {
  long double sum = 0;
  long double power = std::pow(q, static_cast<long double>(offset_.get_d()));
  for (const auto& c : coeffs_) {
    sum += static_cast<long double>(c.get_d()) * power;
    power *= q;
  }
  return sum;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) { return combine(a, b, 1, "series_add"); }

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return combine(a, b, -1, "series_sub"); }

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), 0);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return PuiseuxSeries(a.offset() + b.offset(), std::move(c), order);
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const PuiseuxSeries denom = b.normalized();
  if (denom.is_zero() || denom.coeff(0) == 0) throw std::domain_error("series division by zero");
  const int order = std::min(a.order(), denom.order());
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), 0);
  const Rational lead = denom.coeff(0);
  for (int n = 0; n <= order; ++n) {
    Rational acc = a.coeff(n);
    for (int i = 1; i <= n; ++i) acc -= denom.coeff(i) * c[n - i];
    c[n] = acc / lead;
  }
  return PuiseuxSeries(a.offset() - denom.offset(), std::move(c), order);
}

PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; }
PuiseuxSeries series_sub(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a - b; }
PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; }
PuiseuxSeries series_div(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a / b; }

bool agree_to_common_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const PuiseuxSeries diff = a - b;
  return diff.is_zero();
}

}  // namespace virmod
