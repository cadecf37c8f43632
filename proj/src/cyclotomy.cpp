#include "gcfhs/cyclotomy.hpp"

#include <stdexcept>
#include <string>

#include "gcfhs/numtheory.hpp"

namespace gcfhs {
namespace {

std::uint32_t parity_of(std::uint64_t unit, std::uint64_t p) {
  return quadratic_character(unit, p) == 1 ? 0 : 1;
}

// parity[x] for every unit x mod p^k (entries at non-units are unused),
// built by stepping through the powers of a primitive root.
std::vector<std::uint8_t> power_parity_table(std::uint64_t p, std::uint32_t k) {
  const std::uint64_t q = checked_pow(p, k, FhsParams::kLengthCap);
  const std::uint64_t g = primitive_root_mod_p_squared(p) % q;
  const std::uint64_t order = q - q / p;
  std::vector<std::uint8_t> parity(q, 0);
  std::uint64_t x = 1;
  for (std::uint64_t s = 0; s < order; ++s) {
    parity[x] = static_cast<std::uint8_t>(s % 2);
    x = x * g % q;
  }
  if (x != 1) throw std::logic_error("power_parity_table: generator order mismatch");
  return parity;
}

void check_parity(std::uint32_t i, const char* what) {
  if (i > 1) throw std::invalid_argument(std::string(what) + ": parity must be 0 or 1");
}

void check_level(std::uint32_t k, const FhsParams& params, const char* what) {
  if (k < 1 || k > params.n()) {
    throw std::invalid_argument(std::string(what) + ": level out of range");
  }
}

}  // namespace

FhsParams::FhsParams(std::uint64_t p, std::uint32_t n) : p_(p), n_(n) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  powers_.reserve(n + 1);
  std::uint64_t v = 1;
  powers_.push_back(v);
  for (std::uint32_t e = 1; e <= n; ++e) {
    if (v > (kLengthCap - 1) / p) {
      throw std::invalid_argument("p^n must be below 2^31");
    }
    v *= p;
    powers_.push_back(v);
  }
  nu_ = v;
}

ClassId::ClassId(std::uint32_t index, const FhsParams& params)
    : index_(index), zero_(false) {
  if (index >= params.m()) throw std::invalid_argument("ClassId: index out of range");
}

ClassId ClassId::from_level(std::uint32_t level, std::uint32_t parity,
                            const FhsParams& params) {
  check_level(level, params, "ClassId::from_level");
  check_parity(parity, "ClassId::from_level");
  return ClassId(2 * (level - 1) + parity, params);
}

ClassId classify(std::uint64_t t, const FhsParams& params) {
  if (t >= params.nu()) throw std::invalid_argument("classify: t out of range");
  if (t == 0) return ClassId::zero();
  const PAdicDecomposition d = p_adic_decompose(t, params.p());
  const std::uint32_t level = params.n() - d.exponent;
  return ClassId::from_level(level, parity_of(d.unit, params.p()), params);
}

std::vector<std::uint64_t> class_members(const ClassId& c, const FhsParams& params) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t t = 0; t < params.nu(); ++t) {
    if (classify(t, params).index() == c.index()) members.push_back(t);
  }
  return members;
}

std::vector<std::uint8_t> class_index_table(const FhsParams& params) {
  std::vector<std::uint8_t> table(params.nu());
  for (std::uint64_t t = 0; t < params.nu(); ++t) {
    table[t] = static_cast<std::uint8_t>(classify(t, params).index());
  }
  return table;
}

std::vector<std::uint8_t> class_index_table_by_enumeration(const FhsParams& params) {
  const std::uint64_t p = params.p();
  const std::uint32_t n = params.n();
  std::vector<std::uint8_t> table(params.nu(), 0);
  for (std::uint32_t k = 1; k <= n; ++k) {
    const std::vector<std::uint8_t> parity = power_parity_table(p, k);
    const std::uint64_t scale = params.power(n - k);
    const std::uint64_t q = params.power(k);
    for (std::uint64_t u = 1; u < q; ++u) {
      if (u % p == 0) continue;
      table[scale * u] = static_cast<std::uint8_t>(2 * (k - 1) + parity[u]);
    }
  }
  return table;
}

std::int64_t cyclotomic_number_bruteforce(std::uint32_t i, std::uint32_t j,
                                          std::uint64_t p, std::uint32_t k) {
  check_parity(i, "cyclotomic_number_bruteforce");
  check_parity(j, "cyclotomic_number_bruteforce");
  if (k < 1) throw std::invalid_argument("cyclotomic_number_bruteforce: k must be >= 1");
  const std::vector<std::uint8_t> parity = power_parity_table(p, k);
  const std::uint64_t q = parity.size();
  std::int64_t count = 0;
  for (std::uint64_t x = 1; x < q; ++x) {
    const std::uint64_t y = (x + 1) % q;
    if (x % p == 0 || y % p == 0) continue;
    if (parity[x] == i && parity[y] == j) ++count;
  }
  return count;
}

std::optional<std::int64_t> cyclotomic_number_closed(std::uint32_t i,
                                                     std::uint32_t j,
                                                     std::uint64_t p,
                                                     std::uint32_t k) {
  check_parity(i, "cyclotomic_number_closed");
  check_parity(j, "cyclotomic_number_closed");
  if (k < 1 || !is_odd_prime(p)) return std::nullopt;
  const std::int64_t scale =
      static_cast<std::int64_t>(checked_pow(p, k - 1, FhsParams::kLengthCap));
  const auto ip = static_cast<std::int64_t>(p);
  if (p % 4 == 1) {
    if (i == 0 && j == 0) return scale * (ip - 5) / 4;
    return scale * (ip - 1) / 4;
  }
  if (i == 0 && j == 1) return scale * (ip + 1) / 4;
  return scale * (ip - 3) / 4;
}

ExactRational cyclotomic_number_as_printed(std::uint32_t i, std::uint32_t j,
                                           std::uint64_t p, std::uint32_t k) {
  check_parity(i, "cyclotomic_number_as_printed");
  check_parity(j, "cyclotomic_number_as_printed");
  const auto ip = static_cast<std::int64_t>(p);
  const ExactRational scale = rational_pow(ip, static_cast<std::int64_t>(k) - 1);
  const bool zero_zero = i == 0 && j == 0;
  const bool zero_one = i == 0 && j == 1;
  std::int64_t offset = 0;
  if (p % 4 == 1) {
    offset = zero_zero ? -5 : -1;
  } else {
    offset = zero_one ? -1 : -3;
  }
  return scale * ExactRational::of(ip + offset, 4);
}

std::int64_t level_class_size(const FhsParams& params, std::uint32_t k) {
  check_level(k, params, "level_class_size");
  return static_cast<std::int64_t>(params.power(k) - params.power(k - 1)) / 2;
}

std::int64_t delta_star(std::uint32_t i, std::uint32_t k, std::uint64_t tau,
                        const FhsParams& params, Evaluation mode) {
  check_parity(i, "delta_star");
  check_level(k, params, "delta_star");
  if (tau >= params.nu()) throw std::invalid_argument("delta_star: tau out of range");

  if (mode == Evaluation::kBrute) {
    const std::uint32_t target = 2 * (k - 1) + i;
    std::int64_t count = 0;
    for (std::uint64_t x = 1; x < params.nu(); ++x) {
      if (classify(x, params).index() != target) continue;
      if ((x + tau) % params.nu() == 0) ++count;
    }
    return count;
  }

  if (tau == 0) return 0;
  const ClassId c = classify(tau, params);
  if (c.level() != k) return 0;
  // -1 is a square mod p exactly when p = 1 (mod 4).
  const bool same = c.parity() == i;
  return (params.p_mod4() == 1 ? same : !same) ? 1 : 0;
}

std::int64_t delta_lk(std::uint32_t i, std::uint32_t j, std::uint32_t l,
                      std::uint32_t k, std::uint64_t tau, const FhsParams& params,
                      Evaluation mode) {
  check_parity(i, "delta_lk");
  check_parity(j, "delta_lk");
  check_level(l, params, "delta_lk");
  check_level(k, params, "delta_lk");
  if (tau >= params.nu()) throw std::invalid_argument("delta_lk: tau out of range");

  const std::uint64_t nu = params.nu();
  if (mode == Evaluation::kBrute) {
    const std::uint32_t source = 2 * (k - 1) + j;
    const std::uint32_t target = 2 * (l - 1) + i;
    std::int64_t count = 0;
    for (std::uint64_t x = 1; x < nu; ++x) {
      if (classify(x, params).index() != source) continue;
      const std::uint64_t y = (x + tau) % nu;
      if (y != 0 && classify(y, params).index() == target) ++count;
    }
    return count;
  }

  if (tau == 0) {
    // Same-class overlap is the whole class; the published case table
    // falls through to 0 here.
    return (l == k && i == j) ? level_class_size(params, k) : 0;
  }
  const ClassId c = classify(tau, params);
  const bool p1 = params.p_mod4() == 1;

  if (l < k) {
    if (c.level() != k) return 0;
    const std::uint32_t wanted = p1 ? j : 1 - j;
    return c.parity() == wanted ? level_class_size(params, l) : 0;
  }
  if (l > k) {
    if (c.level() != l) return 0;
    return c.parity() == i ? level_class_size(params, k) : 0;
  }

  const auto cyc = [&](std::uint32_t a, std::uint32_t b) {
    return *cyclotomic_number_closed(a, b, params.p(), k);
  };
  if (i == j) {
    if (c.level() < k) return level_class_size(params, k);
    if (c.level() > k) return 0;
    return c.parity() == i ? cyc(0, 0) : cyc(1, 1);
  }
  if (c.level() != k) return 0;
  if (i == 1) return c.parity() == 0 ? cyc(0, 1) : cyc(1, 0);
  return c.parity() == 0 ? cyc(1, 0) : cyc(0, 1);
}

std::vector<std::int64_t> delta_lk_all_brute(std::uint64_t tau,
                                             const FhsParams& params,
                                             const std::vector<std::uint8_t>& classes) {
  const std::uint64_t nu = params.nu();
  const std::uint32_t m = params.m();
  if (classes.size() != nu) throw std::invalid_argument("delta_lk_all_brute: table size");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m) * m, 0);
  // x ranges over D_j^{(k)}; x + tau is tallied under its own class.
  for (std::uint64_t x = 1; x < nu; ++x) {
    std::uint64_t y = x + tau;
    if (y >= nu) y -= nu;
    if (y == 0) continue;
    ++counts[static_cast<std::size_t>(classes[y]) * m + classes[x]];
  }
  return counts;
}

}  // namespace gcfhs
