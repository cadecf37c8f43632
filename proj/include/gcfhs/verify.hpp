#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcfhs/correlation.hpp"
#include "gcfhs/errata.hpp"

namespace gcfhs {

/// Outcome of one named family of comparisons on one instance.
struct CheckResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  bool ok() const { return failed == 0; }
};

/// Every brute-force-versus-closed-form comparison for one (p, n), plus the
/// arbitration evidence gathered along the way.
struct InstanceVerification {
  FhsParams params;
  std::vector<CheckResult> checks;
  std::vector<ErrataEntry> errata;
  std::vector<Discrepancy> discrepancies;

  bool ok() const;
};

/// Check names, in report order.
inline constexpr const char* kCheckPartition = "partition";
inline constexpr const char* kCheckClassification = "classification-oracle";
inline constexpr const char* kCheckCyclotomic = "cyclotomic-numbers";
inline constexpr const char* kCheckDeltaStar = "delta-star";
inline constexpr const char* kCheckDeltaLk = "delta-lk";
inline constexpr const char* kCheckAuto = "autocorrelation";
inline constexpr const char* kCheckCross = "crosscorrelation";
inline constexpr const char* kCheckUniform = "uniform-distribution";
inline constexpr const char* kCheckAh = "ah-equality";

InstanceVerification verify_instance(const FhsParams& params);

}  // namespace gcfhs
