#include "virmod/rational.hpp"

#include "virmod/errors.hpp"

namespace virmod {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace virmod
