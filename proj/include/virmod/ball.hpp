#pragma once

#include <mpfr.h>

#include <string>

#include "virmod/cyclotomic.hpp"
#include "virmod/rational.hpp"

namespace virmod {

// Owning mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(int precision = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(BigFloat other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

// Midpoint-radius interval: the true value lies in [mid - rad, mid + rad].
// Radii are doubles rounded upward after every operation.
class Ball {
 public:
  explicit Ball(int precision = 128);
  static Ball exact(long value, int precision);
  static Ball from_rational(const Rational& value, int precision);
  // cos(pi * num / den) and sin(pi * num / den).
  static Ball cos_pi(long num, long den, int precision);
  static Ball sin_pi(long num, long den, int precision);
  static Ball sqrt(const Rational& value, int precision);

  int precision() const { return mid_.precision(); }
  const BigFloat& mid() const { return mid_; }
  double radius() const { return rad_; }
  double to_double() const { return mid_.to_double(); }
  // Upper bound for |x| over the ball.
  double magnitude() const;

  bool contains_zero() const;
  bool is_positive() const;
  bool is_negative() const;

  Ball operator-() const;
  Ball& operator+=(const Ball& other);
  Ball& operator-=(const Ball& other);
  Ball& operator*=(const Ball& other);
  Ball& operator*=(long scalar);
  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
  friend Ball operator*(Ball a, long b) { return a *= b; }
  // Exact scaling by 2^e.
  Ball& scale_2exp(long e);
  // this += c * x without allocating.
  void add_scaled(const Ball& x, long c, BigFloat& scratch);
  // Enclosure of 1/x; requires the ball to exclude zero.
  Ball reciprocal() const;

 private:
  void add_rounding_error();

  BigFloat mid_;
  double rad_ = 0.0;
};

struct ComplexBall {
  Ball re;
  Ball im;

  double radius() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);

// Evaluates the power-basis polynomial at zeta_n = exp(2 pi i / n).
ComplexBall float_approx(const CycNumber& value, int precision);

}  // namespace virmod
