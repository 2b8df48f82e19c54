#include "virmod/ball.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "virmod/errors.hpp"

namespace virmod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return std::nextafter(x, -kInf); }
// Zero operands add no rounding.
double add_up(double a, double b) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return up(a + b);
}
double mul_up(double a, double b) { return (a == 0.0 || b == 0.0) ? 0.0 : up(a * b); }

double abs_up(mpfr_srcptr x) {
  mpfr_t tmp;
  mpfr_init2(tmp, mpfr_get_prec(x));
  mpfr_abs(tmp, x, MPFR_RNDU);
  const double d = mpfr_get_d(tmp, MPFR_RNDU);
  mpfr_clear(tmp);
  return d;
}

double abs_down(mpfr_srcptr x) {
  mpfr_t tmp;
  mpfr_init2(tmp, mpfr_get_prec(x));
  mpfr_abs(tmp, x, MPFR_RNDD);
  const double d = mpfr_get_d(tmp, MPFR_RNDD);
  mpfr_clear(tmp);
  return d;
}

double unit_roundoff(int precision) { return std::ldexp(1.0, -precision); }

}  // namespace

BigFloat::BigFloat(int precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(static_cast<int>(mpfr_get_prec(other.value_))) {
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(raw);
}

// ---------------------------------------------------------------------------

Ball::Ball(int precision) : mid_(precision) {}

Ball Ball::exact(long value, int precision) {
  Ball b(precision);
  if (mpfr_set_si(b.mid_.get(), value, MPFR_RNDN) != 0) b.add_rounding_error();
  return b;
}

Ball Ball::from_rational(const Rational& value, int precision) {
  Ball b(precision);
  if (mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN) != 0) b.add_rounding_error();
  return b;
}

Ball Ball::cos_pi(long num, long den, int precision) {
  if (den <= 0) throw DomainError("cos_pi: denominator must be positive");
  long k = num % (2 * den);
  if (k < 0) k += 2 * den;
  Ball b(precision);
  if (k == 0 || 2 * k == 2 * den) {
    mpfr_set_si(b.mid_.get(), k == 0 ? 1 : -1, MPFR_RNDN);
    return b;
  }
  if (2 * k == den || 2 * k == 3 * den) {
    mpfr_set_zero(b.mid_.get(), 1);
    return b;
  }
  // x = pi*k/den carries relative error <= 3u with |x| < 2 pi; cos is
  // 1-Lipschitz, plus one rounding of the result.
  BigFloat x(precision);
  mpfr_const_pi(x.get(), MPFR_RNDN);
  mpfr_mul_si(x.get(), x.get(), k, MPFR_RNDN);
  mpfr_div_si(x.get(), x.get(), den, MPFR_RNDN);
  mpfr_cos(b.mid_.get(), x.get(), MPFR_RNDN);
  b.rad_ = mul_up(25.0, unit_roundoff(precision));
  return b;
}

Ball Ball::sin_pi(long num, long den, int precision) {
  // sin(pi a/b) = cos(pi (b - 2a) / (2b))
  return cos_pi(den - 2 * num, 2 * den, precision);
}

Ball Ball::sqrt(const Rational& value, int precision) {
  if (value < 0) throw DomainError("sqrt of a negative rational");
  Ball b(precision);
  mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
  b.rad_ = mul_up(abs_up(b.mid_.get()), mul_up(3.0, unit_roundoff(precision)));
  return b;
}

double Ball::magnitude() const { return add_up(abs_up(mid_.get()), rad_); }

bool Ball::contains_zero() const { return abs_down(mid_.get()) <= rad_; }

bool Ball::is_positive() const { return mpfr_sgn(mid_.get()) > 0 && abs_down(mid_.get()) > rad_; }

bool Ball::is_negative() const { return mpfr_sgn(mid_.get()) < 0 && abs_down(mid_.get()) > rad_; }

void Ball::add_rounding_error() {
  rad_ = add_up(rad_, mul_up(abs_up(mid_.get()), unit_roundoff(precision())));
}

Ball Ball::operator-() const {
  Ball r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

Ball& Ball::operator+=(const Ball& other) {
  const int inexact = mpfr_add(mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  rad_ = add_up(rad_, other.rad_);
  if (inexact != 0) add_rounding_error();
  return *this;
}

Ball& Ball::operator-=(const Ball& other) {
  const int inexact = mpfr_sub(mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  rad_ = add_up(rad_, other.rad_);
  if (inexact != 0) add_rounding_error();
  return *this;
}

Ball& Ball::operator*=(const Ball& other) {
  const double ma = abs_up(mid_.get());
  const double mb = abs_up(other.mid_.get());
  const double rad = add_up(add_up(mul_up(ma, other.rad_), mul_up(mb, rad_)), mul_up(rad_, other.rad_));
  const int inexact = mpfr_mul(mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  rad_ = rad;
  if (inexact != 0) add_rounding_error();
  return *this;
}

Ball& Ball::operator*=(long scalar) {
  const int inexact = mpfr_mul_si(mid_.get(), mid_.get(), scalar, MPFR_RNDN);
  rad_ = mul_up(rad_, static_cast<double>(scalar < 0 ? -scalar : scalar));
  if (inexact != 0) add_rounding_error();
  return *this;
}

Ball& Ball::scale_2exp(long e) {
  if (e >= 0) {
    mpfr_mul_2ui(mid_.get(), mid_.get(), static_cast<unsigned long>(e), MPFR_RNDN);
    rad_ = up(std::ldexp(rad_, static_cast<int>(e)));
  } else {
    mpfr_div_2ui(mid_.get(), mid_.get(), static_cast<unsigned long>(-e), MPFR_RNDN);
    rad_ = up(std::ldexp(rad_, static_cast<int>(e)));
  }
  return *this;
}

void Ball::add_scaled(const Ball& x, long c, BigFloat& scratch) {
  if (c == 0) return;
  const int inexact_mul = mpfr_mul_si(scratch.get(), x.mid_.get(), c, MPFR_RNDN);
  double rad = mul_up(x.rad_, static_cast<double>(c < 0 ? -c : c));
  if (inexact_mul != 0) rad = add_up(rad, mul_up(abs_up(scratch.get()), unit_roundoff(scratch.precision())));
  const int inexact_add = mpfr_add(mid_.get(), mid_.get(), scratch.get(), MPFR_RNDN);
  rad_ = add_up(rad_, rad);
  if (inexact_add != 0) add_rounding_error();
}

Ball Ball::reciprocal() const {
  if (contains_zero()) throw DomainError("reciprocal of a ball containing zero");
  Ball r(precision());
  const int inexact = mpfr_ui_div(r.mid_.get(), 1, mid_.get(), MPFR_RNDN);
  const double m = abs_down(mid_.get());
  const double lo = down(m - rad_);
  r.rad_ = up(rad_ / down(lo * m));
  if (inexact != 0) r.add_rounding_error();
  return r;
}

// ---------------------------------------------------------------------------

double ComplexBall::radius() const { return add_up(re.radius(), im.radius()); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re + b.re, a.im + b.im}; }

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re - b.re, a.im - b.im}; }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBall float_approx(const CycNumber& value, int precision) {
  if (precision < 53) throw DomainError("float_approx: precision must be at least 53 bits");
  const long n = value.conductor();
  ComplexBall sum{Ball(precision), Ball(precision)};
  for (long k = 0; k < value.degree(); ++k) {
    const Integer& c = value.numerators()[k];
    if (c == 0) continue;
    const Ball coeff = Ball::from_rational(Rational(c), precision);
    sum.re += coeff * Ball::cos_pi(2 * k, n, precision);
    sum.im += coeff * Ball::sin_pi(2 * k, n, precision);
  }
  const Ball inv_den = Ball::from_rational(Rational(Integer(1), value.denominator()), precision);
  sum.re *= inv_den;
  sum.im *= inv_den;
  return sum;
}

}  // namespace virmod
