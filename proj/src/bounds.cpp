#include "gcfhs/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcfhs {
namespace {

using Integer = ExactRational::Integer;

std::int64_t ceil_ratio(const Integer& num, const Integer& den) {
  return ExactRational(num, den).ceil().convert_to<std::int64_t>();
}

}  // namespace

LempelGreenberg lempel_greenberg_bound(std::uint64_t nu, std::uint64_t m) {
  if (nu < 1 || m < 1) throw std::invalid_argument("lempel_greenberg_bound: nu, m >= 1");
  LempelGreenberg result;
  result.corollary = nu == m ? 0 : static_cast<std::int64_t>(nu / m);
  if (nu == 1) {
    result.bound = 0;
  } else {
    const Integer b = nu % m;
    const Integer v = nu;
    result.bound = ceil_ratio((v - b) * (v + b - m), Integer(m) * (v - 1));
  }
  if (result.bound != result.corollary) {
    throw std::logic_error("lempel_greenberg_bound: ceiling and corollary disagree");
  }
  return result;
}

PengFan peng_fan_bounds(std::uint64_t nu, std::uint64_t M, std::uint64_t m) {
  if (nu < 1 || M < 1 || m < 1) {
    throw std::invalid_argument("peng_fan_bounds: arguments must be positive");
  }
  const Integer v = nu;
  const Integer vm = v * M;
  if (vm == 1) throw std::invalid_argument("peng_fan_bounds: nu M must exceed 1");
  const Integer big_i = vm / m;
  PengFan result;
  result.bound1 = ceil_ratio((vm - m) * v, (vm - 1) * m);
  result.bound2 = ceil_ratio(2 * big_i * vm - (big_i + 1) * big_i * M, (vm - 1) * M);
  return result;
}

MaxCorrelations max_correlations(const FhsFamily& family, const CorrelationSet& tables) {
  const std::uint32_t count = family.size();
  if (tables.family_size() != count || tables.length() != family.params().nu()) {
    throw std::invalid_argument("max_correlations: tables do not cover the family");
  }
  MaxCorrelations result;
  result.auto_max.assign(count, 0);
  result.cross_max.assign(static_cast<std::size_t>(count) * count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto& own = tables.values(i, i);
    result.auto_max[i] = own.size() > 1 ? *std::max_element(own.begin() + 1, own.end()) : 0;
    result.family_max = std::max(result.family_max, result.auto_max[i]);
    for (std::uint32_t j = 0; j < count; ++j) {
      if (i == j) continue;
      const auto& row = tables.values(i, j);
      const std::int64_t peak = *std::max_element(row.begin(), row.end());
      result.cross_max[static_cast<std::size_t>(i) * count + j] = peak;
      result.max_cross = std::max(result.max_cross, peak);
    }
  }
  result.family_max = std::max(result.family_max, result.max_cross);
  return result;
}

AverageCorrelations average_correlations(const FhsFamily& family,
                                         const CorrelationSet& tables, AutoRange range) {
  const std::uint32_t count = family.size();
  const std::uint64_t nu = family.params().nu();
  if (count < 2 || nu < 2) {
    throw std::invalid_argument("average_correlations: need M >= 2 and nu >= 2");
  }
  if (tables.family_size() != count || tables.length() != nu) {
    throw std::invalid_argument("average_correlations: tables do not cover the family");
  }
  AverageCorrelations result;
  const std::size_t first = range == AutoRange::kNonZeroShifts ? 1 : 0;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto& own = tables.values(i, i);
    for (std::size_t tau = first; tau < own.size(); ++tau) result.auto_total += own[tau];
    for (std::uint32_t j = i + 1; j < count; ++j) {
      for (std::int64_t v : tables.values(i, j)) result.cross_total += v;
    }
  }
  const auto big_m = static_cast<std::int64_t>(count);
  const auto v = static_cast<std::int64_t>(nu);
  result.auto_average = ExactRational::of(result.auto_total, big_m * (v - 1));
  result.cross_average = ExactRational(Integer(2) * result.cross_total,
                                       Integer(v) * big_m * (big_m - 1));
  return result;
}

AhCheck ah_optimality_check(std::uint64_t nu, std::uint64_t M, std::uint64_t m,
                            const AverageCorrelations& averages) {
  if (nu < 2 || M < 2 || m < 1) throw std::invalid_argument("ah_optimality_check: degenerate shape");
  const Integer v = nu;
  AhCheck check;
  check.lhs = averages.auto_average / ExactRational(v * (M - 1), 1) +
              averages.cross_average / ExactRational(v - 1, 1);
  check.rhs = ExactRational(v * M - m, Integer(m) * (v - 1) * (M - 1));
  check.equality = check.lhs == check.rhs;
  return check;
}

AhCheck ah_optimality_check(const FhsParams& params, const AverageCorrelations& averages) {
  return ah_optimality_check(params.nu(), params.M(), params.m(), averages);
}

namespace {

OptimalityReport assemble(const FhsFamily& family, const CorrelationSet& tables) {
  OptimalityReport report;
  report.nu = family.params().nu();
  report.M = family.size();
  report.m = family.params().m();
  report.lempel_greenberg = lempel_greenberg_bound(report.nu, report.m);
  report.peng_fan = peng_fan_bounds(report.nu, report.M, report.m);
  report.maxima = max_correlations(family, tables);
  for (std::int64_t h : report.maxima.auto_max) {
    report.lempel_greenberg_attained.push_back(h == report.lempel_greenberg.bound);
  }
  report.peng_fan_optimal = report.maxima.family_max == report.peng_fan.bound1 ||
                            report.maxima.family_max == report.peng_fan.bound2;
  report.averages = average_correlations(family, tables);
  report.ah = ah_optimality_check(report.nu, report.M, report.m, report.averages);
  const UniformityReport uniformity = is_uniformly_distributed(family);
  report.uniform = uniformity.uniform;
  report.symbol_totals = uniformity.totals;
  return report;
}

}  // namespace

OptimalityReport optimality_report(const FhsParams& params) {
  const FhsFamily family = build_family(params);
  return assemble(family, CorrelationSet::shift_reduced(family));
}

OptimalityReport optimality_report(const FhsFamily& family) {
  const CorrelationSet tables = has_shift_structure(family)
                                    ? CorrelationSet::shift_reduced(family)
                                    : CorrelationSet::full(family);
  return assemble(family, tables);
}

}  // namespace gcfhs
