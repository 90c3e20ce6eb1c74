#pragma once

#include "cfladder/expansion.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace cfl {

// histogram cap: quotients above it land in one tail bucket, keyed just past
// the cap (the Kuzmin mass beyond 100 is below 1.5%)
inline constexpr long kKuzminCap = 100;
inline constexpr long kKuzminTailKey = kKuzminCap + 1;

struct KuzminReport {
  std::size_t sample_size = 0;
  // keys 1..kKuzminCap plus kKuzminTailKey, always all present; a quotient
  // below 1 (only b_0 can be) adds its own key with expected mass 0
  std::map<long, std::size_t> counts;
  std::map<long, double> empirical;
  std::map<long, double> expected;
  double max_abs_deviation = 0.0;
  std::pair<int, Integer> largest_quotient;  // (n, b_n), ties to smallest n
};

// P(b_n = k) = log2((k+1)^2 / (k (k+2))); throws std::domain_error for k < 1
double kuzmin_expected(long k);

// Frequency report over the quotients b_n with n >= skip_first (b_0 is
// excluded by default: it is not Gauss-map distributed). Throws
// std::domain_error when the sample is empty or skip_first < 0.
KuzminReport kuzmin_report(const Expansion& exp, int skip_first = 1);

}  // namespace cfl
