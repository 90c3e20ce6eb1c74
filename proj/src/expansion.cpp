#include "cfladder/expansion.hpp"

#include <stdexcept>

namespace cfl {

namespace {

void push_convergent(Expansion& exp, const Integer& b) {
  const auto sz = exp.convergents.size();
  const auto& [p1, q1] = exp.convergents[sz - 1];
  // the table starts at n = -1; the recurrence seed for n = -2 is (0, 1)
  const Integer p2 = sz >= 2 ? exp.convergents[sz - 2].first : Integer(0);
  const Integer q2 = sz >= 2 ? exp.convergents[sz - 2].second : Integer(1);
  Integer np = b * p1 + p2;
  Integer nq = b * q1 + q2;
  exp.convergents.emplace_back(std::move(np), std::move(nq));
}

}  // namespace

const std::pair<Integer, Integer>& Expansion::convergent(int n) const {
  if (n < -1 || n > max_index()) throw std::out_of_range("convergent index");
  return convergents[static_cast<std::size_t>(n + 1)];
}

const Integer& Expansion::quotient(int n) const {
  if (n < 0 || n > max_index()) throw std::out_of_range("quotient index");
  return quotients[static_cast<std::size_t>(n)];
}

const AlgebraicNumber& Expansion::complete_quotient(int n) const {
  if (n < 1 || static_cast<std::size_t>(n) > complete_quotients.size())
    throw std::out_of_range("complete quotient index");
  return complete_quotients[static_cast<std::size_t>(n - 1)];
}

Expansion Expansion::prefix(int terms) const {
  if (terms < 1) throw std::domain_error("prefix needs at least one term");
  if (terms >= static_cast<int>(quotients.size())) return *this;
  Expansion out{*this};
  const auto len = static_cast<std::size_t>(terms);
  out.quotients.resize(len);
  out.convergents.resize(len + 1);
  out.complete_quotients.erase(out.complete_quotients.begin() + (terms - 1),
                               out.complete_quotients.end());
  out.terminated = false;
  return out;
}

Expansion expand(const AlgebraicNumber& x, int max_terms) {
  if (max_terms < 1) throw std::domain_error("expand needs max_terms >= 1");
  if (sign_of(x) <= 0) throw std::domain_error("expand needs a positive number");
  Expansion exp{x, {}, {{Integer(1), Integer(0)}}, {}, false};
  exp.quotients.reserve(static_cast<std::size_t>(max_terms));
  exp.convergents.reserve(static_cast<std::size_t>(max_terms) + 1);

  if (x.is_rational()) {
    Rational xi = x.rational();
    for (int i = 0; i < max_terms; ++i) {
      if (i > 0) exp.complete_quotients.push_back(AlgebraicNumber::from_rational(xi));
      Integer b = floor_rat(xi);
      exp.quotients.push_back(b);
      push_convergent(exp, b);
      Rational frac = xi - Rational(b);
      if (frac == 0) {
        exp.terminated = true;
        break;
      }
      xi = 1 / frac;
    }
    return exp;
  }

  AlgebraicNumber::Root st = x.root();
  for (int i = 0; i < max_terms; ++i) {
    if (i > 0) exp.complete_quotients.push_back(AlgebraicNumber::adopt_root(st));
    auto step = detail::gauss_step(st);
    exp.quotients.push_back(step.b);
    push_convergent(exp, step.b);
    st = std::move(step.next);
  }
  return exp;
}

IdentityReport verify_identities(const Expansion& exp) {
  IdentityReport rep;
  rep.all_ok = true;
  const int last = exp.max_index();
  for (int n = 0; n <= last; ++n) {
    IdentityChecks chk;
    chk.n = n;
    const auto& [p, q] = exp.convergent(n);
    const auto& [pm, qm] = exp.convergent(n - 1);
    const int sign_nm1 = (n % 2 == 0) ? -1 : 1;  // (-1)^(n-1)

    chk.determinant_ok = (p * qm - pm * q == sign_nm1);

    // dir = expected sign of x - p_n/q_n: below for even n, above for odd;
    // a terminated expansion ends exactly on the number
    const int dir = -sign_nm1;
    const int side = compare(exp.number, make_frac(p, q));
    chk.side_ok = (side == dir) ||
                  (exp.terminated && n == last && side == 0);

    if (n < last) {
      // |delta_n| < 1/B  <=>  dir*(x - p/q) < 1/(B q^2), and symmetrically
      // for the lower bound; both decided by one exact compare each
      const Integer& b1 = exp.quotient(n + 1);
      const Rational upper_thr = make_frac(b1 * p * q + dir, b1 * q * q);
      const Rational lower_thr = make_frac((b1 + 2) * p * q + dir, (b1 + 2) * q * q);
      const int at_upper = compare(exp.number, upper_thr);
      // the only admissible equality: the terminal step of a rational, where
      // xi_{n+1} is the integer b_{n+1} itself and |delta_n| can reach 1/b_{n+1}
      const bool upper_ok = (at_upper == -dir) ||
                            (exp.terminated && n == last - 1 && at_upper == 0);
      const bool lower_ok = compare(exp.number, lower_thr) == dir;
      chk.delta_ok = upper_ok && lower_ok;
    }

    if (n >= 1 && pm >= 1) {
      // |1 - x q/p| decreasing at n <=> sign(E - F x) matches the side of
      // p_n/q_n, with E = 2 p_{n-1} p_n and F = p_n q_{n-1} + p_{n-1} q_n
      const Integer e = 2 * pm * p;
      const Integer f = p * qm + pm * q;
      chk.relerr_ok = (compare(exp.number, make_frac(e, f)) == -dir);
    }

    rep.all_ok = rep.all_ok && chk.determinant_ok && chk.side_ok &&
                 chk.delta_ok.value_or(true) && chk.relerr_ok.value_or(true);
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace cfl
