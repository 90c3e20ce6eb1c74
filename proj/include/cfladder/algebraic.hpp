#pragma once

#include "cfladder/numeric.hpp"
#include "cfladder/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace cfl {

struct RationalInterval {
  Rational lo, hi;  // invariant: lo < hi
  Rational width() const { return hi - lo; }
};

// A real number: either an exact rational, or the unique root of a
// square-free primitive integer polynomial (no rational roots) inside an
// open rational isolating interval. Values are immutable.
class AlgebraicNumber {
 public:
  struct Root {
    IntPolynomial poly;
    RationalInterval interval;
    int sign_lo;  // sign of poly at interval.lo; never 0, and always -sign at hi
  };

  // throws std::domain_error when den == 0
  static AlgebraicNumber make_rational(const Integer& num, const Integer& den);
  static AlgebraicNumber from_rational(Rational v);

  // normalizes, rejects non-square-free candidates, strips rational roots,
  // validates exactly one root in (lo, hi) with non-root endpoints
  static AlgebraicNumber make_root(const IntPolynomial& candidate,
                                   const Rational& lo, const Rational& hi);

  // the positive real n-th root of m >= 0; exact Rational for perfect powers
  static AlgebraicNumber nth_root(const Integer& m, unsigned long n);

  // wraps a Root whose invariants are already established (engine internal:
  // Moebius/reciprocal images of valid roots are valid by root bijection)
  static AlgebraicNumber adopt_root(Root r);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const Root& root() const { return std::get<Root>(v_); }

  std::string to_string() const;

 private:
  AlgebraicNumber() = default;
  std::variant<Rational, Root> v_;
};

std::ostream& operator<<(std::ostream&, const AlgebraicNumber&);

// same number with isolating interval width <= width (plain bisection);
// rationals unchanged
AlgebraicNumber refine(const AlgebraicNumber& x, const Rational& width);

// exact floor toward -inf
Integer floor_of(const AlgebraicNumber& x);

// 1/(x - b) for irrational x with b = floor_of(x); Rational input is a
// domain error (callers use the Euclidean branch)
AlgebraicNumber moebius_step(const AlgebraicNumber& x, const Integer& b);

// m/x for x > 0, m >= 1
AlgebraicNumber reciprocal_scale(const AlgebraicNumber& x, const Integer& m);

// exact sign of x - r
int compare(const AlgebraicNumber& x, const Rational& r);

// exact sign of the number
int sign_of(const AlgebraicNumber& x);

// exact equality of two algebraic numbers (gcd + Sturm count on the
// intersected isolating intervals)
bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

// full invariant audit (Sturm count == 1, normalization, square-freeness,
// no rational roots); intended for tests
bool well_formed(const AlgebraicNumber& x);

namespace detail {

// floor of the state plus the next complete quotient 1/(x - b), with the
// isolating interval re-seated on a dyadic unit window before the Moebius
// transform so endpoint sizes stay small across thousands of steps
struct GaussStep {
  Integer b;
  AlgebraicNumber::Root next;
};
Integer isolated_floor(const AlgebraicNumber::Root& state);
GaussStep gauss_step(const AlgebraicNumber::Root& state);

}  // namespace detail

}  // namespace cfl
