#pragma once

// Oracles shared by the test binaries. Nothing here calls into the library's
// classification or correlation code, so agreement is meaningful.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gcfhs/sequence.hpp"

namespace gcfhs::testing {

struct Instance {
  std::uint64_t p;
  std::uint32_t n;
};

// Instances every structural check runs on.
inline std::vector<Instance> property_grid() {
  std::vector<Instance> grid;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint32_t n : {2, 3}) grid.push_back({p, n});
  }
  grid.push_back({3, 4});
  grid.push_back({3, 5});
  return grid;
}

inline std::vector<Instance> cross_grid() {
  std::vector<Instance> grid;
  for (std::uint64_t p : {3, 7, 11}) {
    for (std::uint32_t n : {2, 3}) grid.push_back({p, n});
  }
  grid.push_back({3, 4});
  grid.push_back({3, 5});
  return grid;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Class labels by definition: strip the p-adic part, then test whether the
// unit part is a square modulo p by listing all squares.
inline std::vector<std::uint32_t> naive_class_labels(std::uint64_t p, std::uint32_t n) {
  const std::uint64_t nu = ipow(p, n);
  std::set<std::uint64_t> squares;
  for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
  std::vector<std::uint32_t> labels(nu, 0);
  for (std::uint64_t t = 1; t < nu; ++t) {
    std::uint64_t u = t;
    std::uint32_t e = 0;
    while (u % p == 0) {
      u /= p;
      ++e;
    }
    const std::uint32_t level = n - e;
    labels[t] = 2 * (level - 1) + (squares.count(u % p) ? 0 : 1);
  }
  return labels;
}

inline std::int64_t naive_correlation(std::span<const Symbol> x, std::span<const Symbol> y,
                                      std::uint64_t tau) {
  const std::uint64_t nu = x.size();
  std::int64_t hits = 0;
  for (std::uint64_t t = 0; t < nu; ++t) hits += x[(t + tau) % nu] == y[t];
  return hits;
}

// Cross-correlation tables for n = 3, one entry per (delta, level, parity),
// copied from the explicit six-sequence statement. Values are 4 * H so the
// quarter-integer shapes stay integral; tau = 0 is always 0.
inline std::int64_t n3_table_times_four(std::uint32_t delta, std::uint32_t level,
                                        std::uint32_t parity, std::int64_t p) {
  const bool q0 = parity == 0;
  switch (delta) {
    case 1:
    case 5: {
      // delta = 5 swaps the parities of levels 2 and 3.
      const bool zero_side = delta == 1 ? q0 : !q0;
      if (level == 1) return p + 1;
      if (level == 2) return zero_side ? p * (p - 3) : p * p + 3 * p - 2;
      return zero_side ? p * p * (p - 3) : p * p * p + 3 * p * p + 2;
    }
    case 3:
      if (level == 1) return 0;
      if (level == 2) return 2 * (p + 1);
      return 2 * (p + 1) * (p - 1);
    case 2:
    case 4: {
      const bool zero_side = delta == 2 ? q0 : !q0;
      if (level == 1) return 0;
      if (level == 2) return zero_side ? 2 * (p - 1) : 2 * (p + 1);
      return zero_side ? 2 * (p * p + 1) : 2 * (p + 1) * (p - 1);
    }
    default:
      return -1;
  }
}

}  // namespace gcfhs::testing
