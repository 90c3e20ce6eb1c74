#pragma once

#include "cfladder/algebraic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cfl {

// Continued-fraction expansion of a positive algebraic number: partial
// quotients b_0..b_N, the convergent table for n = -1..N, the exact complete
// quotients xi_1..xi_N, and a termination flag for rationals.
struct Expansion {
  AlgebraicNumber number;
  std::vector<Integer> quotients;                         // b_0 .. b_N
  std::vector<std::pair<Integer, Integer>> convergents;   // [i] holds n = i - 1
  std::vector<AlgebraicNumber> complete_quotients;        // [i] holds xi_{i+1}
  bool terminated = false;

  int max_index() const { return static_cast<int>(quotients.size()) - 1; }

  // -1 <= n <= max_index(); throws std::out_of_range otherwise
  const std::pair<Integer, Integer>& convergent(int n) const;
  // 0 <= n <= max_index()
  const Integer& quotient(int n) const;
  // 1 <= n <= max_index() (one short of the quotient count)
  const AlgebraicNumber& complete_quotient(int n) const;

  // the expansion truncated to its first `terms` quotients (terms >= 1);
  // truncation clears `terminated`
  Expansion prefix(int terms) const;
};

// Per-index verdicts for the classical convergent identities. Checks that
// need a neighbour the expansion does not have stay unset.
struct IdentityChecks {
  int n = 0;
  bool determinant_ok = false;        // p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1)
  bool side_ok = false;               // even convergents below x, odd above
  std::optional<bool> delta_ok;       // 1/(b_{n+1}+2) < |delta_n| < 1/b_{n+1}
  std::optional<bool> relerr_ok;      // |1 - x q_n/p_n| strictly decreasing
};

struct IdentityReport {
  std::vector<IdentityChecks> checks;  // one entry per n = 0..N
  bool all_ok = false;
};

// Gauss-map expansion: b_n = floor(xi_n), xi_{n+1} = 1/(xi_n - b_n). Produces
// exactly max_terms quotients for irrational x; for rational x runs the
// Euclidean algorithm to its end (canonical form, last quotient >= 2 when
// longer than one term) unless max_terms cuts it short.
// Throws std::domain_error when x <= 0 or max_terms < 1.
Expansion expand(const AlgebraicNumber& x, int max_terms);

// Exact verification of the determinant identity, the side alternation, the
// delta bounds and relative-error monotonicity. Failures are report entries,
// never exceptions.
IdentityReport verify_identities(const Expansion& exp);

}  // namespace cfl
