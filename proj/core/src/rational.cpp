#include "vexloci/rational.hpp"

#include <stdexcept>

namespace vexloci {

Rational binom_gen(long m, long k) {
  if (k < 0) throw std::invalid_argument("binom_gen: negative k");
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Integer(m - i);
    den *= Integer(i + 1);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_dyadic(const Rational& q) {
  const Integer& d = q.get_den();
  // a power of two has a single set bit
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace vexloci
