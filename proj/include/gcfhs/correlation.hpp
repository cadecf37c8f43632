#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcfhs/errata.hpp"
#include "gcfhs/rational.hpp"
#include "gcfhs/sequence.hpp"

namespace gcfhs {

/// H(X_i, X_j : tau) for every tau in [0, nu).
struct CorrelationTable {
  FhsParams params;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::vector<std::int64_t> values;

  bool is_auto() const { return i == j; }
};

/// Number of t with X((t + tau) mod nu) == Y(t). Throws std::invalid_argument
/// if X and Y do not share params or tau >= nu.
std::int64_t hamming_correlation(const FhsSequence& x, const FhsSequence& y,
                                 std::uint64_t tau);

CorrelationTable correlation_table(const FhsFamily& family, std::uint32_t i,
                                   std::uint32_t j);

/// Result of a closed-form evaluation. `covered` is false only for regimes
/// with no published formula (cross-correlation with p = 1 mod 4). `rule`
/// names the case that fired; `erratum` is set when that case's shipped form
/// came out of arbitration.
struct ClosedFormVerdict {
  bool covered = false;
  std::int64_t value = 0;
  std::string rule;
  std::optional<Erratum> erratum;
};

/// H(i : tau) for 1 <= tau < nu. Independent of i. Throws on tau == 0.
ClosedFormVerdict autocorrelation_closed(const FhsParams& params, std::uint64_t tau);

/// H(i, i + delta : tau) for 1 <= delta < 2n and p = 3 (mod 4); not covered
/// otherwise. Throws std::logic_error if no case of the dispatch fires.
ClosedFormVerdict crosscorrelation_closed(const FhsParams& params,
                                          std::uint32_t delta, std::uint64_t tau);

/// Closed form for the ordered pair (i, j) at any tau in [0, nu): the
/// autocorrelation branch when i == j (tau = 0 gives nu), otherwise the
/// cross-correlation branch with delta = (j - i) mod 2n.
ClosedFormVerdict correlation_closed(const FhsParams& params, std::uint32_t i,
                                     std::uint32_t j, std::uint64_t tau);

/// The published cross-correlation case table evaluated verbatim, exponents
/// and all, in exact rationals. std::nullopt where the printed table has no
/// applicable case. Agrees with crosscorrelation_closed except on arbitrated
/// cases.
std::optional<ExactRational> crosscorrelation_as_printed(const FhsParams& params,
                                                         std::uint32_t delta,
                                                         std::uint64_t tau);

struct Discrepancy {
  FhsParams params;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint64_t tau = 0;
  std::int64_t brute = 0;
  std::int64_t closed = 0;
  std::string rule;
};

/// Compares brute force against every covered closed form, one representative
/// pair (0, delta) per delta in [0, 2n). Empty result certifies the instance.
std::vector<Discrepancy> verify_closed_forms(const FhsParams& params);

/// Correlation tables for every unordered pair of a family, with lookup by
/// ordered pair (i, j).
class CorrelationSet {
 public:
  /// Brute force over all M(M+1)/2 unordered pairs. Works for any family.
  static CorrelationSet full(const FhsFamily& family);

  /// Uses H(i, j : tau) = H(0, (j - i) mod M : tau), so only M tables are
  /// computed. Throws std::invalid_argument unless every X_i equals X_0 - i.
  static CorrelationSet shift_reduced(const FhsFamily& family);

  /// H(i, j : .) as a table indexed by tau.
  const std::vector<std::int64_t>& values(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t family_size() const { return family_size_; }
  std::uint64_t length() const { return length_; }

 private:
  CorrelationSet() = default;

  std::uint32_t family_size_ = 0;
  std::uint64_t length_ = 0;
  bool reduced_ = false;
  std::vector<std::vector<std::int64_t>> tables_;
};

/// True iff the family has m members and X_i(t) = (X_0(t) - i) mod m for
/// every i and t.
bool has_shift_structure(const FhsFamily& family);

}  // namespace gcfhs
