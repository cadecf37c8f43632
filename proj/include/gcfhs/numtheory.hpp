#pragma once

#include <cstdint>

namespace gcfhs {

/// t = p^exponent * unit with gcd(unit, p) = 1.
struct PAdicDecomposition {
  std::uint32_t exponent = 0;
  std::uint64_t unit = 1;

  friend bool operator==(const PAdicDecomposition&,
                         const PAdicDecomposition&) = default;
};

/// Deterministic for the full 64-bit range (Miller-Rabin with a fixed base set).
bool is_odd_prime(std::uint64_t x);

/// base^exp mod modulus. Throws std::invalid_argument if modulus < 2.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus);

/// Splits off the largest power of p dividing t. Throws on t == 0.
PAdicDecomposition p_adic_decompose(std::uint64_t t, std::uint64_t p);

/// Legendre symbol (u/p) via Euler's criterion, returned as +1 or -1.
///
/// For odd p a unit is a square mod p^k exactly when it is a square mod p, so
/// this also decides membership in the index-2 subgroup of units mod p^k.
/// Throws std::invalid_argument if p divides u.
int quadratic_character(std::uint64_t u, std::uint64_t p);

/// Smallest g whose multiplicative order modulo p^2 is p(p-1). Such a g
/// generates the units modulo every power of p.
std::uint64_t primitive_root_mod_p_squared(std::uint64_t p);

/// p^e, throwing std::overflow_error when the result exceeds `limit`.
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e,
                          std::uint64_t limit = UINT64_MAX);

}  // namespace gcfhs
