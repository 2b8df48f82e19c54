#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "virmod/rational.hpp"

namespace virmod {

using IntPoly = std::vector<Integer>;  // low degree first

long euler_phi(long n);

// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
const IntPoly& cyclotomic_polynomial(long n);

// Cached per-conductor data: Phi_n as machine integers and the power-basis
// images of zeta_n^k for 0 <= k < n.
class CyclotomicField {
 public:
  explicit CyclotomicField(long n);

  long conductor() const { return n_; }
  long degree() const { return phi_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  // zeta^k reduced mod Phi_n, length degree(); k is taken mod n.
  const std::int64_t* power(long k) const;
  std::int64_t max_power_coeff() const { return max_power_coeff_; }

 private:
  long n_;
  long phi_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> powers_;
  std::int64_t max_power_coeff_ = 1;
};

// Thread-safe; fields live for the whole process.
const CyclotomicField& cyclotomic_field(long n);

// Element of Q(zeta_n) in the power basis mod Phi_n, stored as an integer
// numerator vector over one positive common denominator (kept primitive).
class CycNumber {
 public:
  explicit CycNumber(long n = 1);
  CycNumber(long n, const Rational& value);
  static CycNumber from_coeffs(long n, const std::vector<Rational>& coeffs);

  long conductor() const { return n_; }
  long degree() const { return static_cast<long>(num_.size()); }
  Rational coeff(long i) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator*=(const Rational& scalar);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const Rational& b) { return a *= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  // Multiplicative inverse by extended Euclid against Phi_n over Q.
  CycNumber inverse() const;
  // Complex conjugation zeta -> zeta^{-1}.
  CycNumber conj() const;
  // Image in Q(zeta_m) for m a multiple of the conductor.
  CycNumber embed(long m) const;

 private:
  friend class RootSum;
  void normalize();
  void check_conductor(const CycNumber& other) const;

  long n_;
  std::vector<Integer> num_;
  Integer den_;
};

CycNumber cyc_root_power(long n, long k);
// cos(pi k / N) as an element of Q(zeta_{2N}).
CycNumber cyc_cos(long k, long N);
// Brings a and b to conductor lcm(a.n, b.n).
std::pair<CycNumber, CycNumber> common_conductor(const CycNumber& a, const CycNumber& b);

// Integer combination of n-th roots of unity over a common denominator, i.e.
// an element of the group ring Z[C_n] scaled by 1/den. Accumulation is O(1)
// per term; reduction to the power basis happens once.
class RootSum {
 public:
  RootSum(long n, std::int64_t den = 1);

  long conductor() const { return n_; }
  void add(long k, std::int64_t c);
  void clear();
  bool empty() const;

  CycNumber reduce() const;
  bool reduces_to_zero() const;

 private:
  std::vector<std::int64_t> reduce_machine() const;

  long n_;
  std::int64_t den_;
  std::vector<std::int64_t> counts_;
};

}  // namespace virmod
