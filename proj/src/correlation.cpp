#include "gcfhs/correlation.hpp"

#include <stdexcept>
#include <utility>

namespace gcfhs {
namespace {

// Exact-integer helpers for the case tables. Every published case evaluates
// to an integer, so a remainder here means the dispatch picked a wrong case.
class CaseMath {
 public:
  explicit CaseMath(const FhsParams& params)
      : params_(params), p_(static_cast<std::int64_t>(params.p())) {}

  std::int64_t p() const { return p_; }

  std::int64_t pow(std::int64_t e) const {
    if (e < 0 || e > static_cast<std::int64_t>(params_.n()) + 2) {
      throw std::logic_error("case table: exponent out of range");
    }
    std::int64_t r = 1;
    for (std::int64_t k = 0; k < e; ++k) r *= p_;
    return r;
  }

  static std::int64_t divide(std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw std::logic_error("case table: non-integral value");
    return num / den;
  }

 private:
  const FhsParams& params_;
  std::int64_t p_;
};

ClosedFormVerdict covered(std::int64_t value, std::string rule,
                          std::optional<Erratum> erratum = std::nullopt) {
  return ClosedFormVerdict{true, value, std::move(rule), erratum};
}

std::uint32_t reduced_delta(std::uint32_t delta) {
  return delta % 2 == 0 ? delta / 2 : (delta + 1) / 2;
}

// Odd delta, d' = 1: H(i, i+1 : tau).
ClosedFormVerdict cross_odd_first(const CaseMath& c, std::uint32_t n, std::uint32_t k,
                                  std::uint32_t parity) {
  const std::int64_t p = c.p();
  if (k == 1) return covered(CaseMath::divide(p + 1, 4), "cross/odd/d'=1/level-1");
  if (parity == 0) {
    return covered(CaseMath::divide(c.pow(k - 1) * (p - 3), 4), "cross/odd/d'=1/D0/k>=2");
  }
  if (k < n) {
    return covered(CaseMath::divide(c.pow(k - 2) * (p * p + 3 * p - 2), 4),
                   "cross/odd/d'=1/D1/2<=k<n");
  }
  return covered(CaseMath::divide(c.pow(n - 2) * (p * p + 3 * p - 2) + 2 * p + 2, 4),
                 "cross/odd/d'=1/D1/k=n");
}

// Odd delta, d' = n: H(i, i+2n-1 : tau).
ClosedFormVerdict cross_odd_last(const CaseMath& c, std::uint32_t n, std::uint32_t k,
                                 std::uint32_t parity) {
  const std::int64_t p = c.p();
  if (k == 1) return covered(CaseMath::divide(p + 1, 4), "cross/odd/d'=n/level-1");
  if (k < n) {
    if (parity == 0) {
      return covered(CaseMath::divide(c.pow(k - 2) * (p * p + 3 * p - 2), 4),
                     "cross/odd/d'=n/D0/2<=k<n");
    }
    return covered(CaseMath::divide(c.pow(k - 1) * (p - 3), 4), "cross/odd/d'=n/D1/2<=k<n");
  }
  if (parity == 0) {
    return covered(CaseMath::divide(c.pow(n - 2) * (p * p + 3 * p - 2) + 2 * p + 2, 4),
                   "cross/odd/d'=n/D0/k=n");
  }
  return covered(CaseMath::divide(c.pow(n - 1) * (p - 3), 4), "cross/odd/d'=n/D1/k=n");
}

// Odd delta, 1 < d' < n.
ClosedFormVerdict cross_odd_middle(const CaseMath& c, std::int64_t n, std::int64_t d,
                                   std::int64_t k, std::uint32_t parity) {
  const std::int64_t p = c.p();
  const std::int64_t eps = n - d + 1;

  if (n % 2 == 0 && 2 * d == n) {
    if (k < d) return covered(0, "cross/odd/2d'=n/k<d'");
    if (k == d) {
      return parity == 0 ? covered(CaseMath::divide(p + 1, 2), "cross/odd/2d'=n/D0/k=d'")
                         : covered(0, "cross/odd/2d'=n/D1/k=d'");
    }
    if (k == d + 1) {
      return parity == 0 ? covered(CaseMath::divide(p * (p - 1), 2), "cross/odd/2d'=n/D0/k=d'+1")
                         : covered(p, "cross/odd/2d'=n/D1/k=d'+1");
    }
    if (parity == 0) {
      return covered(CaseMath::divide(c.pow(k - d - 2) * (p * p + 1) * (p - 1), 2),
                     "cross/odd/2d'=n/D0/k>=d'+2");
    }
    return covered(c.pow(k - d - 1) * (p - 1), "cross/odd/2d'=n/D1/k>=d'+2");
  }

  if (n % 2 == 0 && 2 * d == n + 2) {
    if (k < d - 1) return covered(0, "cross/odd/2d'=n+2/k<d'-1");
    if (k == d - 1) {
      return parity == 0 ? covered(0, "cross/odd/2d'=n+2/D0/k=d'-1")
                         : covered(CaseMath::divide(p + 1, 2), "cross/odd/2d'=n+2/D1/k=d'-1");
    }
    if (k == d) {
      return parity == 0 ? covered(p, "cross/odd/2d'=n+2/D0/k=d'")
                         : covered(CaseMath::divide(p * (p - 1), 2), "cross/odd/2d'=n+2/D1/k=d'");
    }
    if (parity == 0) return covered(c.pow(k - d) * (p - 1), "cross/odd/2d'=n+2/D0/k>d'");
    return covered(CaseMath::divide(c.pow(k - d - 1) * (p * p + 1) * (p - 1), 2),
                   "cross/odd/2d'=n+2/D1/k>d'");
  }

  if (n % 2 == 1 && 2 * d == n + 1) {
    if (k < d) return covered(0, "cross/odd/2d'=n+1/k<d'");
    if (k == d) return covered(CaseMath::divide(p + 1, 2), "cross/odd/2d'=n+1/k=d'");
    return covered(CaseMath::divide(c.pow(k - d - 1) * (p + 1) * (p - 1), 2),
                   "cross/odd/2d'=n+1/k>d'");
  }

  if (2 * d < n) {
    if (k < d) return covered(0, "cross/odd/2d'<n/k<d'");
    if (k == d) {
      return parity == 0 ? covered(CaseMath::divide(p + 1, 2), "cross/odd/2d'<n/D0/k=d'")
                         : covered(0, "cross/odd/2d'<n/D1/k=d'");
    }
    if (parity == 0) {
      if (k < eps + 1) {
        return covered(CaseMath::divide(c.pow(k - d) * (p - 1), 2), "cross/odd/2d'<n/D0/d'<k<=eps");
      }
      return covered(
          CaseMath::divide(c.pow(k - eps - 1) * (c.pow(n + 2 - 2 * d) + 1) * (p - 1), 2),
          "cross/odd/2d'<n/D0/k>eps");
    }
    if (k < eps) {
      return covered(CaseMath::divide(c.pow(k - d - 1) * (p - 1), 2), "cross/odd/2d'<n/D1/d'<k<eps");
    }
    if (k == eps) {
      return covered(CaseMath::divide(c.pow(n - 2 * d + 1) - c.pow(n - 2 * d) + p + 1, 2),
                     "cross/odd/2d'<n/D1/k=eps");
    }
    return covered(CaseMath::divide(c.pow(k - eps) * (c.pow(n - 2 * d) + 1) * (p - 1), 2),
                   "cross/odd/2d'<n/D1/k>eps");
  }

  if (2 * d > n + 2) {
    if (k < eps) return covered(0, "cross/odd/2d'>n+2/k<eps");
    if (k == eps) {
      return parity == 0 ? covered(0, "cross/odd/2d'>n+2/D0/k=eps")
                         : covered(CaseMath::divide(p + 1, 2), "cross/odd/2d'>n+2/D1/k=eps");
    }
    if (parity == 0) {
      if (k < d) {
        return covered(CaseMath::divide(c.pow(k - eps - 1) * (p - 1), 2),
                       "cross/odd/2d'>n+2/D0/eps<k<d'");
      }
      if (k == d) {
        return covered(CaseMath::divide(c.pow(d - eps - 1) * (p - 1) + p + 1, 2),
                       "cross/odd/2d'>n+2/D0/k=d'");
      }
      // Printed with a negative inner exponent; expanded to integer powers.
      return covered(CaseMath::divide((c.pow(k - d) + c.pow(k - eps - 1)) * (p - 1), 2),
                     "cross/odd/2d'>n+2/D0/k>d'", Erratum::kCrossOddWideParityZeroTail);
    }
    if (k < d + 1) {
      return covered(CaseMath::divide(c.pow(k - eps) * (p - 1), 2), "cross/odd/2d'>n+2/D1/eps<k<=d'");
    }
    // (1/2) p^{k-eps} (p^{n-2d'} + 1)(p - 1), expanded.
    return covered(CaseMath::divide((c.pow(k - d - 1) + c.pow(k - eps)) * (p - 1), 2),
                   "cross/odd/2d'>n+2/D1/k>d'", Erratum::kCrossOddWideParityOneTail);
  }

  throw std::logic_error("crosscorrelation_closed: no odd-delta case fired");
}

// Even delta.
ClosedFormVerdict cross_even(const CaseMath& c, std::int64_t n, std::int64_t d,
                             std::int64_t k, std::uint32_t parity) {
  const std::int64_t p = c.p();
  const std::int64_t eps = n - d + 1;

  if (n % 2 == 0 && 2 * d == n) {
    if (k < d + 1) return covered(0, "cross/even/2d'=n/k<=d'");
    if (k == d + 1) return covered(p, "cross/even/2d'=n/k=d'+1");
    return covered(c.pow(k - d - 1) * (p - 1), "cross/even/2d'=n/k>d'+1");
  }

  if (2 * d < n) {
    if (k < d + 1) return covered(0, "cross/even/2d'<n/k<=d'");
    if (k == d + 1) {
      return parity == 0 ? covered(CaseMath::divide(p - 1, 2), "cross/even/2d'<n/D0/k=d'+1")
                         : covered(CaseMath::divide(p + 1, 2), "cross/even/2d'<n/D1/k=d'+1");
    }
    if (k < eps) {
      return covered(CaseMath::divide(c.pow(k - d - 1) * (p - 1), 2), "cross/even/2d'<n/d'+1<k<eps");
    }
    if (k == eps) {
      if (parity == 0) {
        return covered(CaseMath::divide(c.pow(n - 2 * d) * (p - 1) + p + 1, 2),
                       "cross/even/2d'<n/D0/k=eps");
      }
      return covered(CaseMath::divide((c.pow(n - 2 * d) + 1) * (p - 1), 2),
                     "cross/even/2d'<n/D1/k=eps");
    }
    // Printed as "D_0 union D_0"; both parities take this value.
    return covered(CaseMath::divide(c.pow(k - eps) * (c.pow(n - 2 * d) + 1) * (p - 1), 2),
                   "cross/even/2d'<n/k>eps", Erratum::kCrossEvenNarrowTail);
  }

  if (2 * d > n) {
    if (k < eps) return covered(0, "cross/even/2d'>n/k<eps");
    if (k == eps) {
      return parity == 0 ? covered(CaseMath::divide(p + 1, 2), "cross/even/2d'>n/D0/k=eps")
                         : covered(CaseMath::divide(p - 1, 2), "cross/even/2d'>n/D1/k=eps");
    }
    if (k < d + 1) {
      return covered(CaseMath::divide(c.pow(k - eps) * (p - 1), 2), "cross/even/2d'>n/eps<k<=d'");
    }
    if (k == d + 1) {
      if (parity == 0) {
        return covered(CaseMath::divide((c.pow(2 * d - n) + 1) * (p - 1), 2),
                       "cross/even/2d'>n/D0/k=d'+1");
      }
      return covered(CaseMath::divide(c.pow(2 * d - n) * (p - 1) + p + 1, 2),
                     "cross/even/2d'>n/D1/k=d'+1");
    }
    // (1/2) p^{k-eps} (p^{n-2d'} + 1)(p - 1) with n - 2d' < 0, expanded.
    return covered(CaseMath::divide((c.pow(k - d - 1) + c.pow(k - eps)) * (p - 1), 2),
                   "cross/even/2d'>n/k>d'+1", Erratum::kCrossEvenWideTail);
  }

  throw std::logic_error("crosscorrelation_closed: no even-delta case fired");
}

void check_pair(const FhsSequence& x, const FhsSequence& y) {
  if (!(x.params() == y.params())) {
    throw std::invalid_argument("hamming_correlation: sequences must share params");
  }
}

}  // namespace

std::int64_t hamming_correlation(const FhsSequence& x, const FhsSequence& y,
                                 std::uint64_t tau) {
  check_pair(x, y);
  const std::uint64_t nu = x.size();
  if (tau >= nu) throw std::invalid_argument("hamming_correlation: tau out of range");
  const Symbol* a = x.symbols().data();
  const Symbol* b = y.symbols().data();
  std::int64_t hits = 0;
  // Two straight runs instead of a modulo per position.
  const std::uint64_t wrap = nu - tau;
  for (std::uint64_t t = 0; t < wrap; ++t) hits += (a[t + tau] == b[t]);
  for (std::uint64_t t = wrap; t < nu; ++t) hits += (a[t - wrap] == b[t]);
  return hits;
}

CorrelationTable correlation_table(const FhsFamily& family, std::uint32_t i,
                                   std::uint32_t j) {
  if (i >= family.size() || j >= family.size()) {
    throw std::invalid_argument("correlation_table: index out of range");
  }
  const FhsSequence& x = family[i];
  const FhsSequence& y = family[j];
  CorrelationTable table{family.params(), i, j, {}};
  table.values.resize(x.size());
  for (std::uint64_t tau = 0; tau < x.size(); ++tau) {
    table.values[tau] = hamming_correlation(x, y, tau);
  }
  return table;
}

ClosedFormVerdict autocorrelation_closed(const FhsParams& params, std::uint64_t tau) {
  if (tau == 0 || tau >= params.nu()) {
    throw std::invalid_argument("autocorrelation_closed: tau must lie in [1, nu)");
  }
  const ClassId c = classify(tau, params);
  const auto pn = static_cast<std::int64_t>(params.nu());
  const auto p = static_cast<std::int64_t>(params.p());
  const std::uint32_t k = c.level();
  if (k >= 2) {
    const auto pk = static_cast<std::int64_t>(params.power(k));
    const auto pk1 = static_cast<std::int64_t>(params.power(k - 1));
    return covered(CaseMath::divide(2 * pn - pk - 3 * pk1, 2), "auto/k>=2");
  }
  if (params.p_mod4() == 1) {
    if (c.parity() == 0) return covered(CaseMath::divide(2 * pn - p + 1, 2), "auto/p=1mod4/D0/k=1");
    return covered(CaseMath::divide(2 * pn - p - 3, 2), "auto/p=1mod4/D1/k=1");
  }
  return covered(CaseMath::divide(2 * pn - p - 1, 2), "auto/p=3mod4/k=1",
                 Erratum::kAutocorrelationLevelOne);
}

ClosedFormVerdict crosscorrelation_closed(const FhsParams& params,
                                          std::uint32_t delta, std::uint64_t tau) {
  const std::uint32_t n = params.n();
  if (delta == 0 || delta >= params.M()) {
    throw std::invalid_argument("crosscorrelation_closed: delta must lie in [1, 2n)");
  }
  if (tau >= params.nu()) throw std::invalid_argument("crosscorrelation_closed: tau out of range");
  if (params.p_mod4() != 3) {
    return ClosedFormVerdict{false, 0, "cross/not-covered/p=1mod4", std::nullopt};
  }
  if (tau == 0) return covered(0, "cross/tau=0");

  const CaseMath c(params);
  const ClassId cls = classify(tau, params);
  const std::uint32_t d = reduced_delta(delta);
  const std::uint32_t k = cls.level();
  if (delta % 2 == 1) {
    if (d == 1) return cross_odd_first(c, n, k, cls.parity());
    if (d == n) return cross_odd_last(c, n, k, cls.parity());
    return cross_odd_middle(c, n, d, k, cls.parity());
  }
  return cross_even(c, n, d, k, cls.parity());
}

ClosedFormVerdict correlation_closed(const FhsParams& params, std::uint32_t i,
                                     std::uint32_t j, std::uint64_t tau) {
  const std::uint32_t m = params.M();
  if (i >= m || j >= m) throw std::invalid_argument("correlation_closed: index out of range");
  if (i == j) {
    if (tau == 0) return covered(static_cast<std::int64_t>(params.nu()), "auto/tau=0");
    return autocorrelation_closed(params, tau);
  }
  return crosscorrelation_closed(params, (j + m - i) % m, tau);
}

std::optional<ExactRational> crosscorrelation_as_printed(const FhsParams& params,
                                                         std::uint32_t delta,
                                                         std::uint64_t tau) {
  const ClosedFormVerdict v = crosscorrelation_closed(params, delta, tau);
  if (!v.covered) return std::nullopt;
  if (!v.erratum) return ExactRational(v.value);

  const auto p = static_cast<std::int64_t>(params.p());
  const auto n = static_cast<std::int64_t>(params.n());
  const auto d = static_cast<std::int64_t>(reduced_delta(delta));
  const auto k = static_cast<std::int64_t>(classify(tau, params).level());
  const std::int64_t eps = n - d + 1;
  const ExactRational half = ExactRational::of(1, 2);
  const ExactRational pm1(p - 1);

  switch (*v.erratum) {
    case Erratum::kCrossOddWideParityOneTail:
      return half * rational_pow(p, k - eps) * (rational_pow(p, eps - d) + 1) * pm1;
    case Erratum::kCrossOddWideParityZeroTail:
      return half * rational_pow(p, k - eps - 1) * (rational_pow(p, eps - d + 1) + 1) * pm1;
    case Erratum::kCrossEvenWideTail:
      return half * rational_pow(p, k - eps) * (rational_pow(p, n - 2 * d) + 1) * pm1;
    case Erratum::kCrossEvenNarrowTail:
      // The printed condition only names parity 0.
      if (classify(tau, params).parity() == 1) return std::nullopt;
      return ExactRational(v.value);
    default:
      return ExactRational(v.value);
  }
}

std::vector<Discrepancy> verify_closed_forms(const FhsParams& params) {
  const FhsFamily family = build_family(params);
  std::vector<Discrepancy> found;
  for (std::uint32_t delta = 0; delta < params.M(); ++delta) {
    const CorrelationTable table = correlation_table(family, 0, delta);
    for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
      if (delta == 0 && tau == 0) continue;
      const ClosedFormVerdict v = delta == 0 ? autocorrelation_closed(params, tau)
                                             : crosscorrelation_closed(params, delta, tau);
      if (!v.covered || v.value == table.values[tau]) continue;
      found.push_back(Discrepancy{params, 0, delta, tau, table.values[tau], v.value, v.rule});
    }
  }
  return found;
}

bool has_shift_structure(const FhsFamily& family) {
  const std::uint32_t m = family.params().m();
  if (family.size() != m) return false;
  const FhsSequence& base = family[0];
  for (std::uint32_t i = 1; i < family.size(); ++i) {
    for (std::uint64_t t = 0; t < base.size(); ++t) {
      if (family[i][t] != (base[t] + m - i) % m) return false;
    }
  }
  return true;
}

CorrelationSet CorrelationSet::full(const FhsFamily& family) {
  CorrelationSet set;
  const std::uint32_t count = family.size();
  set.family_size_ = count;
  set.length_ = family.params().nu();
  set.tables_.resize(static_cast<std::size_t>(count) * count);
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = i; j < count; ++j) {
      std::vector<std::int64_t> forward = correlation_table(family, i, j).values;
      if (i != j) {
        // H(j, i : tau) = H(i, j : nu - tau).
        std::vector<std::int64_t> backward(forward.size());
        for (std::uint64_t tau = 0; tau < forward.size(); ++tau) {
          backward[tau] = forward[(forward.size() - tau) % forward.size()];
        }
        set.tables_[static_cast<std::size_t>(j) * count + i] = std::move(backward);
      }
      set.tables_[static_cast<std::size_t>(i) * count + j] = std::move(forward);
    }
  }
  return set;
}

CorrelationSet CorrelationSet::shift_reduced(const FhsFamily& family) {
  if (!has_shift_structure(family)) {
    throw std::invalid_argument("CorrelationSet::shift_reduced: family lacks shift structure");
  }
  CorrelationSet set;
  set.family_size_ = family.size();
  set.length_ = family.params().nu();
  set.reduced_ = true;
  set.tables_.reserve(family.size());
  for (std::uint32_t delta = 0; delta < family.size(); ++delta) {
    set.tables_.push_back(correlation_table(family, 0, delta).values);
  }
  return set;
}

const std::vector<std::int64_t>& CorrelationSet::values(std::uint32_t i,
                                                        std::uint32_t j) const {
  if (i >= family_size_ || j >= family_size_) {
    throw std::invalid_argument("CorrelationSet::values: index out of range");
  }
  if (reduced_) return tables_[(j + family_size_ - i) % family_size_];
  return tables_[static_cast<std::size_t>(i) * family_size_ + j];
}

}  // namespace gcfhs
