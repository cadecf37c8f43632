#include "gcfhs/numtheory.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace gcfhs {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                          int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t q = 2; q * q <= x; ++q) {
    if (x % q != 0) continue;
    factors.push_back(q);
    while (x % q == 0) x /= q;
  }
  if (x > 1) factors.push_back(x);
  return factors;
}

}  // namespace

bool is_odd_prime(std::uint64_t x) {
  if (x < 3 || x % 2 == 0) return false;
  // Bases sufficient for a deterministic answer below 3.3e24.
  constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (x == b) return true;
    if (x % b == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t b : kBases) {
    if (miller_rabin_witness(x, b, d, s)) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  std::uint64_t result = 1;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

PAdicDecomposition p_adic_decompose(std::uint64_t t, std::uint64_t p) {
  if (t == 0) throw std::invalid_argument("p_adic_decompose: zero has no level");
  if (p < 2) throw std::invalid_argument("p_adic_decompose: p must be >= 2");
  PAdicDecomposition d{0, t};
  while (d.unit % p == 0) {
    d.unit /= p;
    ++d.exponent;
  }
  return d;
}

int quadratic_character(std::uint64_t u, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("quadratic_character: p must be an odd prime");
  }
  if (u % p == 0) {
    throw std::invalid_argument("quadratic_character: u must be a unit mod p");
  }
  return pow_mod(u, (p - 1) / 2, p) == 1 ? +1 : -1;
}

std::uint64_t primitive_root_mod_p_squared(std::uint64_t p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("primitive_root_mod_p_squared: p must be an odd prime");
  }
  const std::uint64_t p2 = checked_pow(p, 2);
  const std::uint64_t order = p * (p - 1);
  std::vector<std::uint64_t> factors = distinct_prime_factors(p - 1);
  factors.push_back(p);
  for (std::uint64_t g = 2;; ++g) {
    if (g % p == 0) continue;
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, order / q, p2) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
}

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e,
                          std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (p != 0 && r > limit / p) throw std::overflow_error("checked_pow: overflow");
    r *= p;
  }
  return r;
}

}  // namespace gcfhs
