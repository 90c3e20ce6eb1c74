#include "cfladder/ladder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cfl {

namespace {

// exact quotient; false when den == 0 or the division leaves a remainder
bool divide_checked(const Integer& num, const Integer& den, Integer& out) {
  if (den == 0) return false;
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) return false;
  out = std::move(q);
  return true;
}

// rational enclosure of x no wider than w
std::pair<Rational, Rational> bounds_at(const AlgebraicNumber& x, const Rational& w) {
  AlgebraicNumber y = refine(x, w);
  if (y.is_rational()) return {y.rational(), y.rational()};
  return {y.root().interval.lo, y.root().interval.hi};
}

Rational eq_check_width() { return make_frac(1, pow2(64)); }

}  // namespace

Ladder build_ladder(const Expansion& exp_xi, const Expansion& exp_eta,
                    const Integer& m) {
  if (m < 1) throw std::domain_error("ladder needs m >= 1");
  if (!equals(exp_eta.number, reciprocal_scale(exp_xi.number, m)))
    throw std::domain_error("eta does not equal m divided by xi");

  Ladder lad{m, exp_xi, exp_eta, {}};
  std::map<std::pair<Integer, Integer>, int> by_fraction;
  for (int k = 1; k <= exp_eta.max_index(); ++k)
    by_fraction.emplace(exp_eta.convergent(k - 1), k);

  for (int n = 1; n <= exp_xi.max_index(); ++n) {
    const auto& [p, q] = exp_xi.convergent(n - 1);
    if (p == 0) continue;
    Integer num = m * q;
    Integer g = gcd(num, p);
    auto it = by_fraction.find({num / g, p / g});
    if (it == by_fraction.end()) continue;
    const int k = it->second;
    const auto& [bigp, bigq] = exp_eta.convergent(k - 1);

    Connection c;
    c.n = n;
    c.k = k;
    if (!divide_checked(p, bigq, c.r) || !divide_checked(bigp, q, c.s) ||
        c.r * c.s != m)
      throw std::logic_error("connection factors failed to divide");
    Integer tnum = exp_eta.convergent(k - 2).first -
                   c.r * exp_xi.convergent(n - 2).second;
    if (!divide_checked(tnum, q, c.t))
      throw std::logic_error("connection t failed to divide");
    c.value = c.r * exp_xi.quotient(n) - c.s * exp_eta.quotient(k);
    c.lower = 2 - 2 * c.r;
    c.upper = 2 * c.s - 2;
    lad.connections.push_back(std::move(c));
  }
  return lad;
}

const Connection& connection_details(const Ladder& ladder, std::size_t index) {
  if (index >= ladder.connections.size())
    throw std::out_of_range("connection index");
  return ladder.connections[index];
}

LadderReport verify_ladder(const Ladder& ladder) {
  const Expansion& ex = ladder.exp_xi;
  const Expansion& eh = ladder.exp_eta;
  const Integer& m = ladder.m;
  const auto& cs = ladder.connections;
  const Rational eps = eq_check_width();

  LadderReport rep;
  for (const Connection& c : cs) {
    ConnectionVerdict v;
    v.n = c.n;
    v.k = c.k;
    const auto& [p, q] = ex.convergent(c.n - 1);
    const auto& [bigp, bigq] = eh.convergent(c.k - 1);
    Integer r, s, t1, t2;
    const bool div_rs = divide_checked(p, bigq, r) && divide_checked(bigp, q, s);
    v.divisibility_ok = div_rs && r * s == m && p * bigp == m * q * bigq;

    const bool t_first = divide_checked(
        eh.convergent(c.k - 2).first - c.r * ex.convergent(c.n - 2).second, q, t1);
    const bool t_second = divide_checked(
        m * eh.convergent(c.k - 2).second - c.r * ex.convergent(c.n - 2).first, p, t2);
    v.t_exact_ok = t_first && t_second && t1 == t2 && t1 == c.t;

    v.eq5_ok = c.lower <= c.value && c.value <= c.upper;
    v.t_bounds_ok = 1 - c.r <= c.t && c.t <= c.s - 1;
    v.parity_ok = (c.n + c.k) % 2 == 1;

    auto [xlo, xhi] = bounds_at(ex.complete_quotient(c.n), eps);
    auto [elo, ehi] = bounds_at(eh.complete_quotient(c.k), eps);
    const Rational ten_lo = c.r * xlo - c.s * ehi;
    const Rational ten_hi = c.r * xhi - c.s * elo;
    v.eq10_interval_ok = ten_lo <= Rational(c.t) && Rational(c.t) <= ten_hi;

    v.consistency_ok = div_rs && r == c.r && s == c.s &&
                       c.value == c.r * ex.quotient(c.n) - c.s * eh.quotient(c.k) &&
                       c.lower == 2 - 2 * c.r && c.upper == 2 * c.s - 2;
    rep.connections.push_back(v);
  }

  rep.non_crossing_ok = true;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i].n <= cs[i - 1].n || cs[i].k <= cs[i - 1].k)
      rep.non_crossing_ok = false;

  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j + 1 < cs.size() && cs[j + 1].n == cs[j].n + 1 &&
           cs[j + 1].k == cs[j].k + 1)
      ++j;
    RunInfo run;
    run.first = static_cast<int>(i);
    run.length = static_cast<int>(j - i + 1);
    run.swap_ok = true;
    run.middle_zero_ok = true;
    for (std::size_t a = i + 1; a <= j; ++a)
      if (cs[a].r != cs[a - 1].s || cs[a].s != cs[a - 1].r) run.swap_ok = false;
    for (std::size_t a = i + 1; a < j; ++a)
      if (cs[a].value != 0) run.middle_zero_ok = false;
    rep.runs.push_back(run);
    i = j + 1;
  }

  rep.prop24_applicable = compare(eh.number, Rational(m)) < 0;
  if (rep.prop24_applicable) {
    std::set<int> connected;
    for (const Connection& c : cs) connected.insert(c.n);
    const Integer threshold = 2 * m + 1;
    const Integer max_bigq = eh.max_index() >= 1
                                 ? eh.convergent(eh.max_index() - 1).second
                                 : Integer(0);
    for (int n = 1; n <= ex.max_index(); ++n) {
      if (ex.quotient(n) < threshold) continue;
      CoverageStatus st;
      st.n = n;
      if (connected.count(n)) {
        st.state = CoverageStatus::State::covered;
      } else {
        const auto& [p, q] = ex.convergent(n - 1);
        if (p == 0) {
          st.state = CoverageStatus::State::violation;
        } else {
          Integer num = m * q;
          Integer den = p / gcd(num, p);
          st.state = den > max_bigq ? CoverageStatus::State::truncated
                                    : CoverageStatus::State::violation;
        }
      }
      rep.coverage.push_back(st);
    }
  }

  rep.m_prime = mpz_probab_prime_p(m.get_mpz_t(), 25) > 0;
  if (rep.m_prime) {
    for (const Connection& c : cs) {
      Cor27Verdict v;
      v.n = c.n;
      v.k = c.k;
      v.rs_one_m_ok = (c.r == 1 && c.s == m) || (c.r == m && c.s == 1);
      if (c.r == 1)
        v.big_quotient_ok = ex.quotient(c.n) >= m * eh.quotient(c.k);
      else if (c.r == m)
        v.big_quotient_ok = eh.quotient(c.k) >= m * ex.quotient(c.n);
      rep.cor27.push_back(v);
    }
  }

  rep.all_ok = rep.non_crossing_ok;
  for (const ConnectionVerdict& v : rep.connections)
    rep.all_ok = rep.all_ok && v.all();
  for (const RunInfo& run : rep.runs)
    rep.all_ok = rep.all_ok && run.swap_ok && run.middle_zero_ok;
  for (const CoverageStatus& st : rep.coverage)
    rep.all_ok = rep.all_ok && st.state != CoverageStatus::State::violation;
  for (const Cor27Verdict& v : rep.cor27)
    rep.all_ok = rep.all_ok && v.rs_one_m_ok && v.big_quotient_ok;
  return rep;
}

Lemma22Verdict lemma22_residual(const Ladder& ladder, int n) {
  const auto& [p, q] = ladder.exp_xi.convergent(n - 1);
  if (p == 0) throw std::domain_error("residual needs a nonzero numerator");

  Lemma22Verdict v;
  v.n = n;
  Integer num = ladder.m * q;
  v.residual_sign = -compare(ladder.exp_eta.number, make_frac(num, p));
  v.side_sign = -compare(ladder.exp_xi.number, make_frac(p, q));
  v.signs_opposite = v.residual_sign == -v.side_sign;

  // interval form of m q/p - eta = (q/p) eta (xi - p/q): both sides enclosed
  // at width 2^-64 must intersect
  const Rational eps = eq_check_width();
  auto [xlo, xhi] = bounds_at(ladder.exp_xi.number, eps);
  auto [elo, ehi] = bounds_at(ladder.exp_eta.number, eps);
  const Rational pq = make_frac(p, q), mqp = make_frac(num, p);
  const Rational lhs_lo = mqp - ehi, lhs_hi = mqp - elo;
  const Rational f_lo = xlo - pq, f_hi = xhi - pq;
  const Rational c1 = elo * f_lo, c2 = elo * f_hi, c3 = ehi * f_lo, c4 = ehi * f_hi;
  const Rational scale = make_frac(q, p);
  const Rational rhs_lo = std::min(std::min(c1, c2), std::min(c3, c4)) * scale;
  const Rational rhs_hi = std::max(std::max(c1, c2), std::max(c3, c4)) * scale;
  v.magnitude_ok = lhs_lo <= rhs_hi && rhs_lo <= lhs_hi;
  return v;
}

std::vector<std::pair<int, int>> figure3_series(const Ladder& ladder) {
  std::vector<std::pair<int, int>> out;
  out.reserve(ladder.connections.size());
  for (std::size_t i = 0; i < ladder.connections.size(); ++i)
    out.emplace_back(static_cast<int>(i) + 1,
                     ladder.connections[i].n - ladder.connections[i].k);
  return out;
}

}  // namespace cfl
