#include "cfladder/algebraic.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfl {

namespace {

AlgebraicNumber::Root seat_root(IntPolynomial poly, Rational lo, Rational hi) {
  int s = poly.sign_at(lo);
  assert(s != 0);
  assert(poly.sign_at(hi) == -s);
  return AlgebraicNumber::Root{std::move(poly), {std::move(lo), std::move(hi)}, s};
}

// x > g, decided by position against the isolating interval or by one exact
// sign evaluation (g can never be the root: no rational roots)
bool probe_gt(const AlgebraicNumber::Root& st, const Rational& g) {
  if (g <= st.interval.lo) return true;
  if (g >= st.interval.hi) return false;
  int s = st.poly.sign_at(g);
  if (s == 0) throw std::logic_error("rational root escaped construction");
  return s == st.sign_lo;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return from_rational(make_frac(num, den));
}

AlgebraicNumber AlgebraicNumber::from_rational(Rational v) {
  v.canonicalize();
  AlgebraicNumber x;
  x.v_ = std::move(v);
  return x;
}

AlgebraicNumber AlgebraicNumber::adopt_root(Root r) {
  AlgebraicNumber x;
  x.v_ = std::move(r);
  return x;
}

AlgebraicNumber AlgebraicNumber::make_root(const IntPolynomial& candidate,
                                           const Rational& lo, const Rational& hi) {
  if (candidate.degree() < 1) throw std::domain_error("polynomial must be nonconstant");
  if (!(lo < hi)) throw std::domain_error("empty isolating interval");
  IntPolynomial p = candidate.primitive_positive();
  if (!is_square_free(p))
    throw std::domain_error("polynomial is not square-free");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
    throw std::domain_error("interval endpoint is a root");
  auto chain = sturm_chain(p);
  int n = count_roots_open(chain, lo, hi);
  if (n != 1)
    throw std::domain_error("interval must isolate exactly one root, found " +
                            std::to_string(n));
  std::vector<Rational> rats;
  IntPolynomial stripped = strip_rational_roots(p, &rats);
  for (const auto& r : rats)
    if (lo < r && r < hi) return from_rational(r);
  assert(stripped.degree() >= 1);
  return adopt_root(seat_root(std::move(stripped), lo, hi));
}

AlgebraicNumber AlgebraicNumber::nth_root(const Integer& m, unsigned long n) {
  if (n == 0) throw std::domain_error("root order must be >= 1");
  if (m < 0) throw std::domain_error("negative radicand");
  if (n == 1 || m == 0 || m == 1) return from_rational(Rational(m));
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), n);
  if (exact) return from_rational(Rational(r));
  std::vector<Integer> c(n + 1, Integer(0));
  c[0] = 1;
  c[n] = -m;
  return make_root(IntPolynomial(std::move(c)), Rational(r), Rational(r + 1));
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rational().get_str();
  const Root& r = root();
  std::ostringstream os;
  os << "root of " << r.poly << " in (" << r.interval.lo << ", " << r.interval.hi
     << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x) {
  return os << x.to_string();
}

AlgebraicNumber refine(const AlgebraicNumber& x, const Rational& width) {
  if (width <= 0) throw std::domain_error("width must be positive");
  if (x.is_rational()) return x;
  AlgebraicNumber::Root r = x.root();
  while (r.interval.width() > width) {
    Rational mid = (r.interval.lo + r.interval.hi) / 2;
    int s = r.poly.sign_at(mid);
    if (s == 0) throw std::logic_error("rational root escaped construction");
    if (s == r.sign_lo)
      r.interval.lo = std::move(mid);
    else
      r.interval.hi = std::move(mid);
  }
  return AlgebraicNumber::adopt_root(std::move(r));
}

Integer floor_of(const AlgebraicNumber& x) {
  if (x.is_rational()) return floor_rat(x.rational());
  AlgebraicNumber::Root r = x.root();
  for (;;) {
    Integer fl = floor_rat(r.interval.lo);
    if (fl == floor_rat(r.interval.hi)) return fl;
    Rational mid = (r.interval.lo + r.interval.hi) / 2;
    if (r.poly.sign_at(mid) == r.sign_lo)
      r.interval.lo = std::move(mid);
    else
      r.interval.hi = std::move(mid);
  }
}

AlgebraicNumber moebius_step(const AlgebraicNumber& x, const Integer& b) {
  if (x.is_rational())
    throw std::domain_error("moebius_step needs an irrational input");
  if (b != floor_of(x)) throw std::domain_error("b must equal floor_of(x)");
  AlgebraicNumber::Root r = x.root();
  while (!(r.interval.lo > b && r.interval.hi < b + 1)) {
    Rational mid = (r.interval.lo + r.interval.hi) / 2;
    if (r.poly.sign_at(mid) == r.sign_lo)
      r.interval.lo = std::move(mid);
    else
      r.interval.hi = std::move(mid);
  }
  IntPolynomial q = homographic_substitute(r.poly, b, 1, 1, 0);
  Rational lo = Rational(1) / (r.interval.hi - b);
  Rational hi = Rational(1) / (r.interval.lo - b);
  return AlgebraicNumber::adopt_root(seat_root(std::move(q), std::move(lo), std::move(hi)));
}

AlgebraicNumber reciprocal_scale(const AlgebraicNumber& x, const Integer& m) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (compare(x, Rational(0)) <= 0) throw std::domain_error("x must be positive");
  if (x.is_rational()) return AlgebraicNumber::from_rational(m / x.rational());
  AlgebraicNumber::Root r = x.root();
  while (r.interval.lo <= 0) {
    Rational mid = (r.interval.lo + r.interval.hi) / 2;
    if (r.poly.sign_at(mid) == r.sign_lo)
      r.interval.lo = std::move(mid);
    else
      r.interval.hi = std::move(mid);
  }
  IntPolynomial q = homographic_substitute(r.poly, 0, m, 1, 0);
  Rational lo = m / r.interval.hi;
  Rational hi = m / r.interval.lo;
  return AlgebraicNumber::adopt_root(seat_root(std::move(q), std::move(lo), std::move(hi)));
}

int compare(const AlgebraicNumber& x, const Rational& r) {
  if (x.is_rational()) {
    int c = cmp(x.rational(), r);
    return (c > 0) - (c < 0);
  }
  const auto& rt = x.root();
  if (r <= rt.interval.lo) return 1;
  if (r >= rt.interval.hi) return -1;
  int s = rt.poly.sign_at(r);
  if (s == 0) throw std::logic_error("rational root escaped construction");
  return s == rt.sign_lo ? 1 : -1;
}

int sign_of(const AlgebraicNumber& x) { return compare(x, Rational(0)); }

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() != b.is_rational()) return false;  // roots are irrational
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& ra = a.root();
  const auto& rb = b.root();
  Rational lo = std::max(ra.interval.lo, rb.interval.lo);
  Rational hi = std::min(ra.interval.hi, rb.interval.hi);
  if (!(lo < hi)) return false;
  IntPolynomial g = poly_gcd(ra.poly, rb.poly);
  if (g.degree() < 1) return false;
  // a common root inside both isolating intervals must be both numbers
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0)
    throw std::logic_error("isolating endpoint is a root");
  return count_roots_open(sturm_chain(g), lo, hi) >= 1;
}

bool well_formed(const AlgebraicNumber& x) {
  if (x.is_rational()) {
    const Rational& q = x.rational();
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_den() >= 1 && (g == 1 || q.get_num() == 0);
  }
  const auto& r = x.root();
  if (!r.poly.is_normalized() || r.poly.degree() < 1) return false;
  if (!is_square_free(r.poly)) return false;
  if (!(r.interval.lo < r.interval.hi)) return false;
  if (!rational_roots(r.poly).empty()) return false;
  int slo = r.poly.sign_at(r.interval.lo);
  int shi = r.poly.sign_at(r.interval.hi);
  if (slo == 0 || shi != -slo || slo != r.sign_lo) return false;
  return count_roots_open(sturm_chain(r.poly), r.interval.lo, r.interval.hi) == 1;
}

namespace detail {

Integer isolated_floor(const AlgebraicNumber::Root& state) {
  Integer a = floor_rat(state.interval.lo);
  Integer b = floor_rat(state.interval.hi);
  // largest g with x > g; invariant a <= floor(x) <= b
  while (a < b) {
    Integer mid = a + (b - a + 1) / 2;
    if (probe_gt(state, Rational(mid)))
      a = std::move(mid);
    else
      b = mid - 1;
  }
  return a;
}

GaussStep gauss_step(const AlgebraicNumber::Root& state) {
  Integer b = isolated_floor(state);
  // dyadic unit window (u/2^j, (u+1)/2^j) around x: u = floor(2^j x),
  // maintained with one sign probe per halving
  Integer twoj = 2;
  Integer u = b * 2;
  if (probe_gt(state, make_frac(u + 1, twoj))) u += 1;
  for (;;) {
    if (u > b * twoj && make_frac(u, twoj) >= state.interval.lo &&
        make_frac(u + 1, twoj) <= state.interval.hi)
      break;
    twoj <<= 1;
    u <<= 1;
    if (probe_gt(state, make_frac(u + 1, twoj))) u += 1;
  }
  // x - b lies in (a1/2^j, a2/2^j); the next complete quotient 1/(x - b)
  // then lives in (2^j/a2, 2^j/a1) with small exact endpoints
  Integer a1 = u - b * twoj;
  Integer a2 = a1 + 1;
  IntPolynomial q = homographic_substitute(state.poly, b, 1, 1, 0);
  AlgebraicNumber::Root next =
      seat_root(std::move(q), make_frac(twoj, a2), make_frac(twoj, a1));
  return GaussStep{std::move(b), std::move(next)};
}

}  // namespace detail

}  // namespace cfl
