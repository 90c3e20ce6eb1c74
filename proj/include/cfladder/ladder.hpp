#pragma once

#include "cfladder/expansion.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cfl {

// A connection of the ladder of (xi, eta = m/xi): indices (n, k) with
// p_{n-1} P_{k-1} = m q_{n-1} Q_{k-1}, the exact factors r = p_{n-1}/Q_{k-1}
// and s = P_{k-1}/q_{n-1} (r s = m), the integer t = (P_{k-2} - r q_{n-2}) /
// q_{n-1} = r xi_n - s eta_k, and the bracketed quantity r b_n - s B_k.
struct Connection {
  int n = 0, k = 0;        // 1-based triplet indices
  Integer r, s;
  Integer t;
  Integer value;           // r b_n - s B_k
  Integer lower, upper;    // -2r + 2 and 2s - 2
};

struct Ladder {
  Integer m;
  Expansion exp_xi, exp_eta;
  std::vector<Connection> connections;  // ordered by n (and by k)
};

struct ConnectionVerdict {
  int n = 0, k = 0;
  bool divisibility_ok = false;   // r, s divide exactly and r s = m
  bool eq5_ok = false;            // lower <= value <= upper
  bool t_exact_ok = false;        // both integral forms of t agree
  bool t_bounds_ok = false;       // -r + 1 <= t <= s - 1
  bool parity_ok = false;         // n and k of opposite parity
  bool eq10_interval_ok = false;  // t = r xi_n - s eta_k within width 2^-64
  bool consistency_ok = false;    // stored fields match re-derivation
  bool all() const {
    return divisibility_ok && eq5_ok && t_exact_ok && t_bounds_ok &&
           parity_ok && eq10_interval_ok && consistency_ok;
  }
};

// maximal block of connections consecutive in both indices
struct RunInfo {
  int first = 0;   // position of the first member in Ladder::connections
  int length = 0;
  bool swap_ok = false;         // consecutive members swap (r, s)
  bool middle_zero_ok = false;  // strict-interior members have value = 0
};

// status of an index n with b_n >= 2m + 1 when eta < m: it must carry a
// connection; `truncated` means its partner convergent lies beyond eta's table
struct CoverageStatus {
  enum class State { covered, truncated, violation };
  int n = 0;
  State state = State::covered;
};

// prime-m consequences: {r, s} = {1, m} and the forced large quotient
struct Cor27Verdict {
  int n = 0, k = 0;
  bool rs_one_m_ok = false;
  bool big_quotient_ok = false;  // r=1: b_n >= m B_k; r=m: B_k >= m b_n
};

struct LadderReport {
  std::vector<ConnectionVerdict> connections;
  bool non_crossing_ok = false;
  std::vector<RunInfo> runs;
  bool prop24_applicable = false;        // eta < m holds exactly
  std::vector<CoverageStatus> coverage;  // one entry per n with b_n >= 2m+1
  bool m_prime = false;
  std::vector<Cor27Verdict> cor27;
  bool all_ok = false;
};

struct Lemma22Verdict {
  int n = 0;
  int residual_sign = 0;        // sign(m q_{n-1} - eta p_{n-1})
  int side_sign = 0;            // sign(p_{n-1} - q_{n-1} xi)
  bool signs_opposite = false;  // residual_sign == -side_sign
  bool magnitude_ok = false;    // interval form of the identity at 2^-64
};

// Finds every connection by reduced-fraction lookup over eta's convergents
// (no pair search). Throws std::domain_error when m < 1 or when
// exp_eta.number differs from m / exp_xi.number.
Ladder build_ladder(const Expansion& exp_xi, const Expansion& exp_eta,
                    const Integer& m);

// stored connection at 0-based position; throws std::out_of_range
const Connection& connection_details(const Ladder& ladder, std::size_t index);

// Evaluates every theorem the ladder is expected to satisfy; failures are
// verdict entries, never exceptions.
LadderReport verify_ladder(const Ladder& ladder);

// Sign consequence of the residual identity
// m q/p - eta = -(q/p) eta (p/q - xi) at the convergent p_{n-1}/q_{n-1},
// plus an interval cross-check of the magnitudes. Throws std::domain_error
// when p_{n-1} = 0.
Lemma22Verdict lemma22_residual(const Ladder& ladder, int n);

// (i, n_i - k_i) for the i-th connection, 1-based
std::vector<std::pair<int, int>> figure3_series(const Ladder& ladder);

}  // namespace cfl
