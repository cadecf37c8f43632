#include "gcfhs/errata.hpp"

#include <array>
#include <stdexcept>

namespace gcfhs {
namespace {

constexpr std::array<ErratumInfo, 8> kErrata = {{
    {Erratum::kCyclotomicZeroOneP3, "cyclotomic-number/p=3mod4/(0,1)",
     "p^(k-1)(p-1)/4", "p^(k-1)(p+1)/4", Resolution::kCorrected},
    {Erratum::kDeltaDiagonalAtZero, "delta/l=k/i=j/tau=0", "0 (otherwise branch)",
     "(p^k-p^(k-1))/2", Resolution::kCorrected},
    {Erratum::kAutocorrelationLevelOne, "autocorrelation/p=3mod4/level-1",
     "tau in D_1^(0) intersect D_1^(1)", "tau in D_0^(1) union D_1^(1)",
     Resolution::kConfirmed},
    {Erratum::kCrossOddWideParityOneTail, "cross/odd/2d'>n+2/D1/k>=d'+1",
     "(1/2)p^(k-eps)(p^(eps-d')+1)(p-1)", "(1/2)p^(k-eps)(p^(n-2d')+1)(p-1)",
     Resolution::kCorrected},
    {Erratum::kCrossOddWideParityZeroTail, "cross/odd/2d'>n+2/D0/k>d'",
     "(1/2)p^(k-eps-1)(p^(eps-d'+1)+1)(p-1)",
     "(1/2)(p^(k-d')+p^(k-eps-1))(p-1)", Resolution::kConfirmed},
    {Erratum::kCrossEvenNarrowTail, "cross/even/2d'<n/k>eps",
     "tau in D_0^(k) union D_0^(k)", "tau in D_0^(k) union D_1^(k)",
     Resolution::kCorrected},
    {Erratum::kCrossEvenWideTail, "cross/even/2d'>n/k>d'+1",
     "(1/2)p^(k-eps)(p^(n-2d')+1)(p-1)", "(1/2)(p^(k-d'-1)+p^(k-eps))(p-1)",
     Resolution::kConfirmed},
    {Erratum::kAverageAutoRange, "average-autocorrelation/N_a/range",
     "sum over tau = 0..nu-1", "sum over tau = 1..nu-1", Resolution::kCorrected},
}};

}  // namespace

const ErratumInfo& erratum_info(Erratum id) {
  for (const auto& info : kErrata) {
    if (info.id == id) return info;
  }
  throw std::logic_error("erratum_info: unknown erratum");
}

std::span<const ErratumInfo> all_errata() { return kErrata; }

std::string_view to_string(Resolution r) {
  return r == Resolution::kCorrected ? "corrected" : "confirmed";
}

nlohmann::ordered_json to_json(const ErrataEntry& entry) {
  const ErratumInfo& info = erratum_info(entry.id);
  nlohmann::ordered_json j;
  j["location"] = info.location;
  j["printed"] = info.printed;
  j["shipped"] = info.shipped;
  j["resolution"] = to_string(info.resolution);
  j["p"] = entry.p;
  j["n"] = entry.n;
  j["cases_checked"] = entry.cases_checked;
  j["printed_mismatches"] = entry.printed_mismatches;
  j["shipped_mismatches"] = entry.shipped_mismatches;
  return j;
}

}  // namespace gcfhs
