#include "virmod/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "virmod/errors.hpp"

namespace virmod {

namespace {

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Exact division of integer polynomials; divisor must be monic.
IntPoly divide_monic(const IntPoly& dividend, const IntPoly& divisor) {
  IntPoly rem = dividend;
  const std::size_t dd = divisor.size() - 1;
  if (rem.size() < divisor.size()) return {};
  IntPoly quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer lead = rem[i];
    if (lead == 0) continue;
    quot[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= lead * divisor[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) throw ConventionError("cyclotomic division left a remainder");
  }
  return quot;
}

unsigned bit_length(const Integer& x) {
  return x == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

unsigned bit_length(std::int64_t x) {
  unsigned bits = 0;
  auto u = static_cast<std::uint64_t>(x < 0 ? -x : x);
  while (u) {
    ++bits;
    u >>= 1;
  }
  return bits;
}

Integer from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<std::uint64_t>(u >> 64);
  const auto lo = static_cast<std::uint64_t>(u);
  Integer r = hi;
  r <<= 64;
  r += Integer(static_cast<unsigned long>(lo));
  return neg ? Integer(-r) : r;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// (quotient, remainder) of a / b over Q; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = a[k + b.size() - 1] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      while (m % f == 0) m /= f;
      result -= result / f;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPoly& cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicField::CyclotomicField(long n) : n_(n), phi_(euler_phi(n)) {
  const IntPoly& phi_poly = cyclotomic_polynomial(n);
  modulus_.reserve(phi_poly.size());
  for (const auto& c : phi_poly) {
    if (!c.fits_slong_p()) throw DomainError("cyclotomic polynomial coefficient too large");
    modulus_.push_back(c.get_si());
  }
  powers_.assign(static_cast<std::size_t>(n_ * phi_), 0);
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (long k = 0; k < n_; ++k) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + k * phi_);
    for (auto c : cur) max_power_coeff_ = std::max<std::int64_t>(max_power_coeff_, c < 0 ? -c : c);
    // multiply by x and reduce with the monic modulus
    const std::int64_t top = cur[phi_ - 1];
    for (long j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (long j = 0; j < phi_; ++j) {
        std::int64_t prod;
        if (__builtin_mul_overflow(top, modulus_[j], &prod) ||
            __builtin_sub_overflow(cur[j], prod, &cur[j]))
          throw DomainError("cyclotomic power table overflow at conductor " + std::to_string(n));
      }
    }
  }
}

const std::int64_t* CyclotomicField::power(long k) const {
  return powers_.data() + mod_floor(k, n_) * phi_;
}

const CyclotomicField& cyclotomic_field(long n) {
  if (n < 1) throw DomainError("conductor must be positive");
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto field = std::make_unique<CyclotomicField>(n);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(field));
  return *it->second;
}

// ---------------------------------------------------------------------------

CycNumber::CycNumber(long n) : n_(n), num_(euler_phi(n), 0), den_(1) {}

CycNumber::CycNumber(long n, const Rational& value) : CycNumber(n) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNumber CycNumber::from_coeffs(long n, const std::vector<Rational>& coeffs) {
  CycNumber r(n);
  if (static_cast<long>(coeffs.size()) != r.degree())
    throw DomainError("coefficient vector length must equal euler_phi(n)");
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  r.den_ = den;
  r.normalize();
  return r;
}

Rational CycNumber::coeff(long i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNumber::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (long i = 0; i < degree(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  return coeff(0);
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::check_conductor(const CycNumber& other) const {
  if (n_ != other.n_)
    throw DomainError("conductor mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  check_conductor(other);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) { return *this += -other; }

CycNumber& CycNumber::operator*=(const Rational& scalar) {
  for (auto& c : num_) c *= scalar.get_num();
  den_ *= scalar.get_den();
  normalize();
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  check_conductor(other);
  const CyclotomicField& field = cyclotomic_field(n_);
  const long phi = field.degree();
  const long len = 2 * phi - 1;

  unsigned bits_a = 0, bits_b = 0;
  for (const auto& c : num_) bits_a = std::max(bits_a, bit_length(c));
  for (const auto& c : other.num_) bits_b = std::max(bits_b, bit_length(c));
  const unsigned phi_bits = bit_length(static_cast<std::int64_t>(phi)) + 1;
  const unsigned budget = bits_a + bits_b + 2 * phi_bits + bit_length(field.max_power_coeff());

  std::vector<Integer> out(phi, 0);
  if (budget < 124) {
    std::vector<std::int64_t> a(phi), b(phi);
    for (long i = 0; i < phi; ++i) {
      a[i] = num_[i].get_si();
      b[i] = other.num_[i].get_si();
    }
    std::vector<__int128> conv(len, 0);
    for (long i = 0; i < phi; ++i) {
      if (a[i] == 0) continue;
      for (long j = 0; j < phi; ++j) conv[i + j] += static_cast<__int128>(a[i]) * b[j];
    }
    std::vector<__int128> red(conv.begin(), conv.begin() + phi);
    for (long k = phi; k < len; ++k) {
      if (conv[k] == 0) continue;
      const std::int64_t* pw = field.power(k);
      for (long j = 0; j < phi; ++j) red[j] += conv[k] * pw[j];
    }
    for (long j = 0; j < phi; ++j) out[j] = from_int128(red[j]);
  } else {
    std::vector<Integer> conv(len, 0);
    for (long i = 0; i < phi; ++i) {
      if (num_[i] == 0) continue;
      for (long j = 0; j < phi; ++j) conv[i + j] += num_[i] * other.num_[j];
    }
    for (long j = 0; j < phi; ++j) out[j] = conv[j];
    for (long k = phi; k < len; ++k) {
      if (conv[k] == 0) continue;
      const std::int64_t* pw = field.power(k);
      for (long j = 0; j < phi; ++j)
        if (pw[j] != 0) out[j] += conv[k] * Integer(static_cast<long>(pw[j]));
    }
  }
  num_ = std::move(out);
  den_ *= other.den_;
  normalize();
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(n_) + ")");
  // Solve s*a + t*Phi = 1 over Q[x]; only s is tracked.
  RatPoly a = coeffs();
  trim(a);
  RatPoly m;
  for (const auto& c : cyclotomic_polynomial(n_)) m.emplace_back(c);
  RatPoly r0 = m, r1 = a;
  RatPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw ConventionError("inverse: element shares a factor with Phi_n");
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  RatPoly reduced = divmod(s1, m).second;
  reduced.resize(degree());
  return from_coeffs(n_, reduced);
}

CycNumber CycNumber::conj() const {
  const CyclotomicField& field = cyclotomic_field(n_);
  const long phi = field.degree();
  CycNumber r(n_);
  for (long k = 0; k < phi; ++k) {
    if (num_[k] == 0) continue;
    const std::int64_t* pw = field.power(-k);
    for (long j = 0; j < phi; ++j)
      if (pw[j] != 0) r.num_[j] += num_[k] * Integer(static_cast<long>(pw[j]));
  }
  r.den_ = den_;
  r.normalize();
  return r;
}

CycNumber CycNumber::embed(long m) const {
  if (m % n_ != 0) throw DomainError("embed: target conductor must be a multiple of the source");
  if (m == n_) return *this;
  const long step = m / n_;
  const CyclotomicField& field = cyclotomic_field(m);
  const long phi = field.degree();
  CycNumber r(m);
  for (long k = 0; k < degree(); ++k) {
    if (num_[k] == 0) continue;
    const std::int64_t* pw = field.power(k * step);
    for (long j = 0; j < phi; ++j)
      if (pw[j] != 0) r.num_[j] += num_[k] * Integer(static_cast<long>(pw[j]));
  }
  r.den_ = den_;
  r.normalize();
  return r;
}

CycNumber cyc_root_power(long n, long k) {
  RootSum acc(n);
  acc.add(k, 1);
  return acc.reduce();
}

CycNumber cyc_cos(long k, long N) {
  if (N < 1) throw DomainError("cyc_cos: N must be positive");
  RootSum acc(2 * N, 2);
  acc.add(k, 1);
  acc.add(-k, 1);
  return acc.reduce();
}

std::pair<CycNumber, CycNumber> common_conductor(const CycNumber& a, const CycNumber& b) {
  const long m = std::lcm(a.conductor(), b.conductor());
  return {a.embed(m), b.embed(m)};
}

// ---------------------------------------------------------------------------

RootSum::RootSum(long n, std::int64_t den) : n_(n), den_(den), counts_(n, 0) {
  if (n < 1) throw DomainError("RootSum: conductor must be positive");
  if (den < 1) throw DomainError("RootSum: denominator must be positive");
}

void RootSum::add(long k, std::int64_t c) { counts_[mod_floor(k, n_)] += c; }

void RootSum::clear() { std::fill(counts_.begin(), counts_.end(), 0); }

bool RootSum::empty() const {
  for (auto c : counts_)
    if (c != 0) return false;
  return true;
}

std::vector<std::int64_t> RootSum::reduce_machine() const {
  const CyclotomicField& field = cyclotomic_field(n_);
  const long phi = field.degree();
  std::vector<std::int64_t> out(phi, 0);
  for (long k = 0; k < n_; ++k) {
    const std::int64_t c = counts_[k];
    if (c == 0) continue;
    const std::int64_t* pw = field.power(k);
    for (long j = 0; j < phi; ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(c, pw[j], &prod) || __builtin_add_overflow(out[j], prod, &out[j]))
        throw DomainError("RootSum reduction overflow");
    }
  }
  return out;
}

CycNumber RootSum::reduce() const {
  const auto machine = reduce_machine();
  CycNumber r(n_);
  for (std::size_t j = 0; j < machine.size(); ++j) r.num_[j] = static_cast<long>(machine[j]);
  r.den_ = static_cast<long>(den_);
  r.normalize();
  return r;
}

bool RootSum::reduces_to_zero() const {
  for (auto c : reduce_machine())
    if (c != 0) return false;
  return true;
}

}  // namespace virmod
