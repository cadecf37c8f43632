#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcfhs/rational.hpp"

namespace gcfhs {

/// Instance descriptor: odd prime p, exponent n >= 2, length nu = p^n and
/// alphabet size m = family size M = 2n. Immutable once built.
class FhsParams {
 public:
  /// Largest supported length is below this value.
  static constexpr std::uint64_t kLengthCap = std::uint64_t{1} << 31;

  /// Throws std::invalid_argument if p is not an odd prime, n < 2, or
  /// p^n >= 2^31.
  FhsParams(std::uint64_t p, std::uint32_t n);

  std::uint64_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t nu() const { return nu_; }
  std::uint32_t m() const { return 2 * n_; }
  std::uint32_t M() const { return 2 * n_; }
  /// p mod 4, either 1 or 3.
  std::uint32_t p_mod4() const { return static_cast<std::uint32_t>(p_ % 4); }
  /// p^e for 0 <= e <= n.
  std::uint64_t power(std::uint32_t e) const { return powers_.at(e); }

  friend bool operator==(const FhsParams& a, const FhsParams& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  std::uint64_t p_;
  std::uint32_t n_;
  std::uint64_t nu_;
  std::vector<std::uint64_t> powers_;
};

/// Index into the partition C_0..C_{2n-1} of Z_{p^n}. Index 2(k-1)+i holds
/// the scaled coset p^{n-k} D_i^{(p^k)}; C_0 additionally holds 0.
class ClassId {
 public:
  /// Throws std::invalid_argument unless index < 2n.
  ClassId(std::uint32_t index, const FhsParams& params);
  /// Class of level k in [1, n] and parity i in {0, 1}.
  static ClassId from_level(std::uint32_t level, std::uint32_t parity,
                            const FhsParams& params);
  static ClassId zero() { return ClassId(0, true); }

  std::uint32_t index() const { return index_; }
  std::uint32_t level() const { return index_ / 2 + 1; }
  std::uint32_t parity() const { return index_ % 2; }
  /// Set only for the element 0, which is folded into C_0.
  bool is_zero() const { return zero_; }

  friend bool operator==(const ClassId& a, const ClassId& b) = default;

 private:
  ClassId(std::uint32_t index, bool zero) : index_(index), zero_(zero) {}

  std::uint32_t index_;
  bool zero_;
};

ClassId classify(std::uint64_t t, const FhsParams& params);

/// Every residue t with classify(t) == c, ascending. Full scan; meant for
/// oracle and test paths.
std::vector<std::uint64_t> class_members(const ClassId& c, const FhsParams& params);

/// Dense table of classify(t).index() for every t in [0, nu).
std::vector<std::uint8_t> class_index_table(const FhsParams& params);

/// Independent classification: walks the powers g^s mod p^k of the primitive
/// root and records the parity of s for every unit, then maps t = p^{n-k} u
/// through that table. Never calls quadratic_character.
std::vector<std::uint8_t> class_index_table_by_enumeration(const FhsParams& params);

/// (i,j)_{p^k}: units x mod p^k with x in D_i and x+1 a unit in D_j, counted
/// exhaustively. Class membership comes from power enumeration.
std::int64_t cyclotomic_number_bruteforce(std::uint32_t i, std::uint32_t j,
                                          std::uint64_t p, std::uint32_t k);

/// Closed form of (i,j)_{p^k}, with the (0,1) constant for p = 3 (mod 4)
/// taken from the brute-force arbitration. std::nullopt outside the validated
/// domain (p not an odd prime, or k < 1).
std::optional<std::int64_t> cyclotomic_number_closed(std::uint32_t i,
                                                     std::uint32_t j,
                                                     std::uint64_t p,
                                                     std::uint32_t k);

/// The closed form exactly as published, which is not always an integer.
ExactRational cyclotomic_number_as_printed(std::uint32_t i, std::uint32_t j,
                                           std::uint64_t p, std::uint32_t k);

enum class Evaluation { kClosed, kBrute };

/// |{0} intersect (D_i^{(k)} + tau)|.
std::int64_t delta_star(std::uint32_t i, std::uint32_t k, std::uint64_t tau,
                        const FhsParams& params, Evaluation mode);

/// |D_i^{(l)} intersect (D_j^{(k)} + tau)|.
std::int64_t delta_lk(std::uint32_t i, std::uint32_t j, std::uint32_t l,
                      std::uint32_t k, std::uint64_t tau, const FhsParams& params,
                      Evaluation mode);

/// All brute-force Delta_{l,k}(i,j:tau) for one tau in a single O(nu) pass.
/// Entry [(2(l-1)+i) * 2n + 2(k-1)+j].
std::vector<std::int64_t> delta_lk_all_brute(std::uint64_t tau,
                                             const FhsParams& params,
                                             const std::vector<std::uint8_t>& classes);

/// |D_i^{(k)}| = (p^k - p^{k-1}) / 2.
std::int64_t level_class_size(const FhsParams& params, std::uint32_t k);

}  // namespace gcfhs
