#pragma once

#include <cstdint>
#include <vector>

#include "gcfhs/correlation.hpp"
#include "gcfhs/rational.hpp"
#include "gcfhs/sequence.hpp"

namespace gcfhs {

struct LempelGreenberg {
  /// ceil((nu - b)(nu + b - m) / (m (nu - 1))) with b = nu mod m.
  std::int64_t bound = 0;
  /// floor(nu / m), or 0 when nu == m.
  std::int64_t corollary = 0;
};

/// Both forms are computed and must agree; a disagreement throws
/// std::logic_error. nu == 1 yields 0.
LempelGreenberg lempel_greenberg_bound(std::uint64_t nu, std::uint64_t m);

struct PengFan {
  std::int64_t bound1 = 0;
  std::int64_t bound2 = 0;
};

/// Lower bounds on H(S) for M sequences of length nu over m symbols, with
/// I = floor(nu M / m).
PengFan peng_fan_bounds(std::uint64_t nu, std::uint64_t M, std::uint64_t m);

struct MaxCorrelations {
  /// H(X_i), maximized over 1 <= tau < nu.
  std::vector<std::int64_t> auto_max;
  /// H(X_i, X_j) for i != j, row-major M x M; diagonal entries are 0.
  std::vector<std::int64_t> cross_max;
  /// Largest off-diagonal entry of cross_max.
  std::int64_t max_cross = 0;
  /// H(S).
  std::int64_t family_max = 0;
};

/// Throws std::invalid_argument if the table set does not cover the family.
MaxCorrelations max_correlations(const FhsFamily& family, const CorrelationSet& tables);

/// Range of shifts summed into N_a.
enum class AutoRange {
  kNonZeroShifts,  // tau = 1..nu-1, the range under which PPAB equality holds
  kAllShifts,      // tau = 0..nu-1, kept for arbitration evidence
};

struct AverageCorrelations {
  std::int64_t auto_total = 0;   // N_a
  std::int64_t cross_total = 0;  // N_c, over unordered pairs
  ExactRational auto_average;    // A_a = N_a / (M (nu - 1))
  ExactRational cross_average;   // A_c = 2 N_c / (nu M (M - 1))
};

/// Requires at least two sequences of length at least two.
AverageCorrelations average_correlations(const FhsFamily& family,
                                         const CorrelationSet& tables,
                                         AutoRange range = AutoRange::kNonZeroShifts);

struct AhCheck {
  ExactRational lhs;  // A_a / (nu (M - 1)) + A_c / (nu - 1)
  ExactRational rhs;  // (nu M - m) / (m (nu - 1)(M - 1))
  bool equality = false;
};

AhCheck ah_optimality_check(std::uint64_t nu, std::uint64_t M, std::uint64_t m,
                            const AverageCorrelations& averages);
AhCheck ah_optimality_check(const FhsParams& params, const AverageCorrelations& averages);

struct OptimalityReport {
  std::uint64_t nu = 0;
  std::uint64_t M = 0;
  std::uint64_t m = 0;
  LempelGreenberg lempel_greenberg;
  /// H(X_i) == lempel_greenberg.bound, per sequence.
  std::vector<bool> lempel_greenberg_attained;
  PengFan peng_fan;
  bool peng_fan_optimal = false;
  MaxCorrelations maxima;
  AverageCorrelations averages;
  AhCheck ah;
  bool uniform = false;
  std::vector<std::uint64_t> symbol_totals;
};

/// Builds the family of `params`, its tables (shift reduced) and every bound.
OptimalityReport optimality_report(const FhsParams& params);

/// Same evaluation for an arbitrary family, e.g. a perturbed one.
OptimalityReport optimality_report(const FhsFamily& family);

}  // namespace gcfhs
