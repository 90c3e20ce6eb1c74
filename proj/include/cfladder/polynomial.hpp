#pragma once

#include "cfladder/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cfl {

// Univariate integer polynomial, coefficients stored highest degree first.
// Normalized form (required by AlgebraicNumber): primitive (content 1),
// positive leading coefficient, no leading zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Integer> coeffs_highest_first);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.front(); }
  Integer coeff_of_degree(int d) const;  // 0 outside range

  Integer content() const;  // gcd of coefficients, >= 0; 0 for zero polynomial
  // primitive part with positive leading coefficient; *negated reports a sign flip
  IntPolynomial primitive_positive(bool* negated = nullptr) const;
  bool is_normalized() const;

  IntPolynomial derivative() const;

  // exact sign of p(r) via the homogeneous form sum c_i num^(d-i) den^i
  int sign_at(const Rational& r) const;
  int sign_at(const Integer& z) const;
  Rational eval(const Rational& r) const;

  bool operator==(const IntPolynomial&) const = default;
  std::string to_string() const;  // e.g. "x^3 - 2"

 private:
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream&, const IntPolynomial&);

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_neg(const IntPolynomial& a);

// exact quotient num/den in Z[x]; throws std::domain_error when not exact
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// gcd up to units, returned primitive with positive leading coefficient
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

bool is_square_free(const IntPolynomial& p);

// substitute x := (a*y + b) / (c*y + d) and clear denominators:
// result ~ sum_i coeff_i (a y + b)^i (c y + d)^(deg - i), normalized primitive
// with positive leading coefficient; *negated reports the sign flip
IntPolynomial homographic_substitute(const IntPolynomial& p, const Integer& a,
                                     const Integer& b, const Integer& c,
                                     const Integer& d, bool* negated = nullptr);

// every real root x of p satisfies |x| < bound
Rational cauchy_root_bound(const IntPolynomial& p);

// Sturm chain of p (p square-free for exact counts); signs preserved, each
// element divided by its positive content only
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);
int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& at);
// number of roots in the open interval (lo, hi); endpoints must not be roots
int count_roots_open(const std::vector<IntPolynomial>& chain, const Rational& lo,
                     const Rational& hi);

// rational roots of a primitive square-free polynomial (exact, via
// monicization + integer root isolation; no integer factorization)
std::vector<Rational> rational_roots(const IntPolynomial& p);
// divides out (den*x - num) for every rational root num/den; optionally
// reports the roots removed
IntPolynomial strip_rational_roots(IntPolynomial p,
                                   std::vector<Rational>* roots = nullptr);

}  // namespace cfl
