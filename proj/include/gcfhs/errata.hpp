#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace gcfhs {

/// Published formulas whose printed form was arbitrated against brute force.
/// Each has a shipped form that the oracle confirms on every verified instance.
enum class Erratum {
  kCyclotomicZeroOneP3,        // (0,1)_{p^k} for p = 3 (mod 4)
  kDeltaDiagonalAtZero,        // Delta_{k,k}(i,i:0)
  kAutocorrelationLevelOne,    // level-one condition, p = 3 (mod 4)
  kCrossOddWideParityOneTail,  // odd delta, 2d' > n+2, parity 1, k > d'
  kCrossOddWideParityZeroTail, // odd delta, 2d' > n+2, parity 0, k > d'
  kCrossEvenNarrowTail,        // even delta, 2d' < n, k > eps
  kCrossEvenWideTail,          // even delta, 2d' > n, k > d'+1
  kAverageAutoRange,           // lower summation index of N_a
};

enum class Resolution {
  kCorrected,  // printed form fails the oracle; shipped form differs
  kConfirmed,  // suspect printed form holds (possibly after rewriting)
};

struct ErratumInfo {
  Erratum id;
  std::string_view location;
  std::string_view printed;
  std::string_view shipped;
  Resolution resolution;
};

const ErratumInfo& erratum_info(Erratum id);
std::span<const ErratumInfo> all_errata();
std::string_view to_string(Resolution r);

/// One ledger line: evidence gathered for an erratum on one (p, n) instance.
struct ErrataEntry {
  Erratum id;
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t printed_mismatches = 0;
  std::uint64_t shipped_mismatches = 0;
};

nlohmann::ordered_json to_json(const ErrataEntry& entry);

}  // namespace gcfhs
