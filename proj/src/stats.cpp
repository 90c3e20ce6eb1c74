#include "cfladder/stats.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cfl {

double kuzmin_expected(long k) {
  if (k < 1) throw std::domain_error("Kuzmin law needs k >= 1");
  const double kd = static_cast<double>(k);
  return std::log2((kd + 1) * (kd + 1) / (kd * (kd + 2)));
}

KuzminReport kuzmin_report(const Expansion& exp, int skip_first) {
  if (skip_first < 0) throw std::domain_error("skip_first must be >= 0");
  const int last = exp.max_index();
  if (skip_first > last) throw std::domain_error("no quotients left to sample");

  KuzminReport rep;
  for (long k = 1; k <= kKuzminCap; ++k) rep.counts[k] = 0;
  rep.counts[kKuzminTailKey] = 0;

  for (int n = skip_first; n <= last; ++n) {
    const Integer& b = exp.quotient(n);
    const long key = b > kKuzminCap ? kKuzminTailKey : b.get_si();
    ++rep.counts[key];
    ++rep.sample_size;
    if (n == skip_first || b > rep.largest_quotient.second)
      rep.largest_quotient = {n, b};
  }

  for (const auto& [key, count] : rep.counts) {
    const double emp = static_cast<double>(count) /
                       static_cast<double>(rep.sample_size);
    double expct = 0.0;
    if (key == kKuzminTailKey)
      // telescoped mass above the cap: 1 - sum_{1..cap} = log2((cap+2)/(cap+1))
      expct = std::log2((kKuzminCap + 2.0) / (kKuzminCap + 1.0));
    else if (key >= 1)
      expct = kuzmin_expected(key);
    rep.empirical[key] = emp;
    rep.expected[key] = expct;
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(emp - expct));
  }
  return rep;
}

}  // namespace cfl
