#pragma once

#include <gmpxx.h>

#include <string>

namespace vexloci {

using Rational = mpq_class;
using Integer = mpz_class;

// Generalized binomial m(m-1)...(m-k+1)/k!, defined for every integer m.
// Throws std::invalid_argument when k < 0.
Rational binom_gen(long m, long k);

// 2^e for any integer e.
Rational pow2(long e);

bool is_integer(const Rational& q);
// Denominator is a power of two (includes 1).
bool is_dyadic(const Rational& q);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace vexloci
