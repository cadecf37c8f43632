#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcfhs/cyclotomy.hpp"

namespace gcfhs {

using Symbol = std::uint8_t;

/// One hopping pattern X_i: nu symbols over the alphabet [0, 2n).
class FhsSequence {
 public:
  /// Wraps an arbitrary symbol array. Throws std::invalid_argument if the
  /// length is not nu or a symbol lies outside [0, m).
  FhsSequence(std::uint32_t seq_index, FhsParams params, std::vector<Symbol> symbols);

  std::uint32_t seq_index() const { return seq_index_; }
  const FhsParams& params() const { return params_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::uint64_t size() const { return symbols_.size(); }
  Symbol operator[](std::uint64_t t) const { return symbols_[t]; }

  /// Copy with position t set to f. Used to build non-uniform mutants.
  FhsSequence with_symbol(std::uint64_t t, Symbol f) const;

 private:
  std::uint32_t seq_index_;
  FhsParams params_;
  std::vector<Symbol> symbols_;
};

/// Ordered collection of sequences sharing one FhsParams; sequences()[i] has
/// seq_index i.
class FhsFamily {
 public:
  /// Throws std::invalid_argument on an empty set, mismatched params, or
  /// indices out of order.
  explicit FhsFamily(std::vector<FhsSequence> sequences);

  const FhsParams& params() const { return sequences_.front().params(); }
  const std::vector<FhsSequence>& sequences() const { return sequences_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(sequences_.size()); }
  const FhsSequence& operator[](std::uint32_t i) const { return sequences_.at(i); }

  /// Copy with sequence i replaced.
  FhsFamily with_sequence(FhsSequence replacement) const;

 private:
  std::vector<FhsSequence> sequences_;
};

/// X_i(t) = (class index of t - i) mod 2n, so that the support of symbol j in
/// X_i is C_{(i+j) mod 2n}.
FhsSequence build_sequence(std::uint32_t i, const FhsParams& params);

/// All M = 2n sequences.
FhsFamily build_family(const FhsParams& params);

/// N_X(f) for f in [0, m).
std::vector<std::uint64_t> frequency_counts(const FhsSequence& x);

struct UniformityReport {
  bool uniform = false;
  /// N_S(f) = sum over the family of N_X(f).
  std::vector<std::uint64_t> totals;
};

UniformityReport is_uniformly_distributed(const FhsFamily& family);

}  // namespace gcfhs
