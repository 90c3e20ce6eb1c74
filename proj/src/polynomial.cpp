#include "cfladder/polynomial.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfl {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs_highest_first)
    : c_(std::move(coeffs_highest_first)) {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
}

Integer IntPolynomial::coeff_of_degree(int d) const {
  if (d < 0 || d > degree()) return Integer(0);
  return c_[static_cast<std::size_t>(degree() - d)];
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_positive(bool* negated) const {
  if (negated) *negated = false;
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) {
    g = -g;
    if (negated) *negated = true;
  }
  if (g == 1) return *this;
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

bool IntPolynomial::is_normalized() const {
  return !is_zero() && leading() > 0 && content() == 1;
}

IntPolynomial IntPolynomial::derivative() const {
  int d = degree();
  if (d < 1) return IntPolynomial();
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out.push_back(c_[static_cast<std::size_t>(i)] * (d - i));
  return IntPolynomial(std::move(out));
}

int IntPolynomial::sign_at(const Rational& r) const {
  if (is_zero()) return 0;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();  // > 0 for canonical mpq
  // acc after step i equals sum_{j<=i} c_j num^(i-j) den^j
  Integer acc = c_[0];
  Integer dp = 1;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    dp *= den;
    acc = acc * num + c_[i] * dp;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at(const Integer& z) const {
  if (is_zero()) return 0;
  Integer acc = c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) acc = acc * z + c_[i];
  return sgn(acc);
}

Rational IntPolynomial::eval(const Rational& r) const {
  Rational acc = 0;
  for (const auto& c : c_) acc = acc * r + Rational(c);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    int d = degree() - static_cast<int>(i);
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || d == 0) os << a.get_str();
    if (d > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::size_t n = std::max(ca.size(), cb.size());
  std::vector<Integer> out(n, Integer(0));
  for (std::size_t i = 0; i < ca.size(); ++i) out[n - ca.size() + i] += ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) out[n - cb.size() + i] += cb[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Integer> out(ca.size() + cb.size() - 1, Integer(0));
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_neg(const IntPolynomial& a) {
  std::vector<Integer> out = a.coeffs();
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.is_zero()) return IntPolynomial();
  if (num.degree() < den.degree())
    throw std::domain_error("polynomial division is not exact");
  // long division over Q, then require an integral exact quotient
  std::vector<Rational> rem;
  rem.reserve(num.coeffs().size());
  for (const auto& c : num.coeffs()) rem.emplace_back(c);
  const auto& d = den.coeffs();
  std::size_t qn = rem.size() - d.size() + 1;
  std::vector<Rational> quot(qn);
  for (std::size_t i = 0; i < qn; ++i) {
    Rational f = rem[i] / Rational(d[0]);
    quot[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * Rational(d[j]);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  std::vector<Integer> out;
  out.reserve(qn);
  for (const auto& q : quot) {
    if (q.get_den() != 1) throw std::domain_error("polynomial division is not exact");
    out.push_back(q.get_num());
  }
  return IntPolynomial(std::move(out));
}

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r
IntPolynomial prem(const IntPolynomial& a, const IntPolynomial& b) {
  assert(!b.is_zero() && a.degree() >= b.degree());
  const Integer& lb = b.leading();
  IntPolynomial r = a;
  long e = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    // r := lb*r - lr*x^(dr-db)*b
    std::vector<Integer> shift(static_cast<std::size_t>(r.degree() - b.degree()) + 1,
                               Integer(0));
    shift[0] = r.leading();
    IntPolynomial sub = poly_mul(IntPolynomial(std::move(shift)), b);
    std::vector<Integer> scaled = r.coeffs();
    for (auto& c : scaled) c *= lb;
    r = poly_add(IntPolynomial(std::move(scaled)), poly_neg(sub));
    --e;
  }
  if (e > 0) {
    Integer f = ipow(lb, static_cast<unsigned long>(e));
    std::vector<Integer> out = r.coeffs();
    for (auto& c : out) c *= f;
    r = IntPolynomial(std::move(out));
  }
  return r;
}

// divide by positive content only (keeps the sign, safe inside Sturm chains)
IntPolynomial primitive_keep_sign(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = p.content();
  if (g == 1) return p;
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_positive();
  b = b.primitive_positive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_keep_sign(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_positive();
}

bool is_square_free(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() < 2) return p.degree() >= 0;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

IntPolynomial homographic_substitute(const IntPolynomial& p, const Integer& a,
                                     const Integer& b, const Integer& c,
                                     const Integer& d, bool* negated) {
  assert(a * d - b * c != 0);
  int deg = p.degree();
  assert(deg >= 0);
  std::vector<IntPolynomial> upow, vpow;
  upow.reserve(static_cast<std::size_t>(deg) + 1);
  vpow.reserve(static_cast<std::size_t>(deg) + 1);
  IntPolynomial one(std::vector<Integer>{Integer(1)});
  IntPolynomial u(std::vector<Integer>{a, b});
  IntPolynomial v(std::vector<Integer>{c, d});
  upow.push_back(one);
  vpow.push_back(one);
  for (int i = 1; i <= deg; ++i) {
    upow.push_back(poly_mul(upow.back(), u));
    vpow.push_back(poly_mul(vpow.back(), v));
  }
  IntPolynomial acc;
  for (int i = 0; i <= deg; ++i) {
    Integer coef = p.coeff_of_degree(i);
    if (coef == 0) continue;
    IntPolynomial term = poly_mul(upow[static_cast<std::size_t>(i)],
                                  vpow[static_cast<std::size_t>(deg - i)]);
    std::vector<Integer> sc = term.coeffs();
    for (auto& x : sc) x *= coef;
    acc = poly_add(acc, IntPolynomial(std::move(sc)));
  }
  assert(!acc.is_zero());
  return acc.primitive_positive(negated);
}

Rational cauchy_root_bound(const IntPolynomial& p) {
  assert(p.degree() >= 0);
  Integer mx = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    Integer a = abs(c[i]);
    if (a > mx) mx = a;
  }
  return Rational(1) + make_frac(mx, abs(p.leading()));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  chain.push_back(primitive_keep_sign(p));
  if (p.degree() < 1) return chain;
  chain.push_back(primitive_keep_sign(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = prem(a, b);
    if (r.is_zero()) break;
    // prem scales by lc(b)^(delta+1); flip so the step equals -(a mod b)
    // times a positive constant, as the Sturm recurrence requires
    long delta1 = a.degree() - b.degree() + 1;
    bool factor_neg = (b.leading() < 0) && (delta1 % 2 != 0);
    chain.push_back(primitive_keep_sign(factor_neg ? r : poly_neg(r)));
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& at) {
  int var = 0, prev = 0;
  for (const auto& s : chain) {
    int v = s.sign_at(at);
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++var;
    prev = v;
  }
  return var;
}

int count_roots_open(const std::vector<IntPolynomial>& chain, const Rational& lo,
                     const Rational& hi) {
  assert(lo < hi);
  assert(chain[0].sign_at(lo) != 0 && chain[0].sign_at(hi) != 0);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

// monic M with M(y) = lc^(deg-1) * p(y / lc); integer roots of M are exactly
// lc * (rational roots of p)
IntPolynomial monicize(const IntPolynomial& p) {
  int d = p.degree();
  const Integer& cd = p.leading();
  std::vector<Integer> out(static_cast<std::size_t>(d) + 1);
  out[0] = 1;
  for (int j = d - 1; j >= 0; --j)
    out[static_cast<std::size_t>(d - j)] =
        p.coeff_of_degree(j) * ipow(cd, static_cast<unsigned long>(d - 1 - j));
  return IntPolynomial(std::move(out));
}

// one integer root of a monic square-free integer polynomial, if any;
// isolation by Sturm-guided bisection (midpoints that hit a root are the
// root itself: a monic integer polynomial has only integer rational roots)
bool find_integer_root(const IntPolynomial& m, Integer& out) {
  if (m.degree() < 1) return false;
  if (m.coeff_of_degree(0) == 0) {
    out = 0;
    return true;
  }
  auto chain = sturm_chain(m);
  Integer bound = ceil_rat(cauchy_root_bound(m));
  std::vector<std::pair<Rational, Rational>> stack;
  stack.emplace_back(Rational(-bound), Rational(bound));
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (count_roots_open(chain, a, b) == 0) continue;
    if (b - a <= 1) {
      Integer g = floor_rat(a) + 1;
      if (Rational(g) < b && m.sign_at(g) == 0) {
        out = g;
        return true;
      }
      continue;
    }
    Rational mid = (a + b) / 2;
    if (m.sign_at(mid) == 0) {
      assert(mid.get_den() == 1);
      out = mid.get_num();
      return true;
    }
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  return false;
}

}  // namespace

IntPolynomial strip_rational_roots(IntPolynomial p, std::vector<Rational>* roots) {
  assert(p.is_normalized() && is_square_free(p));
  while (p.degree() >= 1) {
    IntPolynomial m = monicize(p);
    Integer g;
    if (!find_integer_root(m, g)) break;
    Rational root = make_frac(g, p.leading());
    if (roots) roots->push_back(root);
    IntPolynomial lin(std::vector<Integer>{root.get_den(), -root.get_num()});
    p = divide_exact(p, lin);
  }
  return p;
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  std::vector<Rational> roots;
  strip_rational_roots(p, &roots);
  return roots;
}

}  // namespace cfl
