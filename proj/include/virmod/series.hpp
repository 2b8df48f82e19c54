#pragma once

#include <vector>

#include "virmod/rational.hpp"

namespace virmod {

// Truncated series sum_{n=0}^{order} c_n q^{offset + n}. Coefficients past
// `order` are unknown, and every operation propagates the smallest trusted
// order of its inputs.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : PuiseuxSeries(Rational(0), {}, 0) {}
  PuiseuxSeries(Rational offset, std::vector<Rational> coeffs, int order);

  static PuiseuxSeries one(int order);
  static PuiseuxSeries monomial(const Rational& exponent, const Rational& coeff, int order);

  const Rational& offset() const { return offset_; }
  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  // Coefficient of q^exponent; throws DomainError if the exponent is outside
  // offset + {0..order}.
  Rational coefficient_at(const Rational& exponent) const;
  // Highest trusted exponent, offset + order.
  Rational horizon() const { return offset_ + order_; }

  bool nonnegative_integer_coefficients() const;
  bool is_zero() const;
  PuiseuxSeries truncated(int order) const;
  // Drops leading zero coefficients, moving the offset up.
  PuiseuxSeries normalized() const;
  // Sum evaluated at real 0 < q < 1.
  long double evaluate(long double q) const;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries operator-() const;
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a.offset_ == b.offset_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Rational offset_;
  std::vector<Rational> coeffs_;
  int order_;
};

PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries series_sub(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries series_div(const PuiseuxSeries& a, const PuiseuxSeries& b);

// True when both series agree on every exponent up to the smaller horizon
// (offsets need only be congruent mod 1).
bool agree_to_common_order(const PuiseuxSeries& a, const PuiseuxSeries& b);

}  // namespace virmod
