#pragma once

#include <gmpxx.h>

#include <string>

namespace cfl {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const Rational& q) { return sgn(q); }

// floor toward -inf; denominator of a canonical mpq is always positive
inline Integer floor_rat(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Integer ceil_rat(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// reduced fraction with positive denominator; caller guarantees den != 0
inline Rational make_frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer pow2(unsigned long j) {
  Integer r = 1;
  r <<= j;
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cfl
