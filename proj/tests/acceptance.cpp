// Exit gate: one PASS/FAIL line per acceptance criterion, nonzero exit if any
// criterion fails. Every check compares the library against an oracle that
// lives in this directory or against a fixed expected value.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gcfhs/bounds.hpp"
#include "gcfhs/cli.hpp"
#include "gcfhs/correlation.hpp"
#include "gcfhs/cyclotomy.hpp"
#include "golden.hpp"
#include "support.hpp"

namespace {

using namespace gcfhs;
using gcfhs::testing::Instance;

class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok ? ++passed_ : ++failed_;
  }
  bool ok() const { return failed_ == 0 && passed_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << passed_ << " checks passed, " << failed_ << " failed";
    for (const std::string& f : failures_) s << "\n      " << f;
    return s.str();
  }

 private:
  std::uint64_t passed_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string tag(const Instance& g) {
  return "p=" + std::to_string(g.p) + " n=" + std::to_string(g.n);
}

void partition_suite(Outcome& o) {
  for (const Instance& g : gcfhs::testing::property_grid()) {
    const FhsParams params(g.p, g.n);
    const auto naive = gcfhs::testing::naive_class_labels(g.p, g.n);
    const auto table = class_index_table(params);
    const auto enumerated = class_index_table_by_enumeration(params);
    std::vector<std::uint64_t> sizes(params.m(), 0);
    for (std::uint64_t t = 0; t < params.nu(); ++t) {
      o.expect(table[t] == naive[t] && enumerated[t] == naive[t], tag(g) + " t=" + std::to_string(t));
      if (t != 0) ++sizes[table[t]];
    }
    for (std::uint32_t c = 0; c < params.m(); ++c) {
      const std::uint32_t k = c / 2 + 1;
      const std::uint64_t expected = (gcfhs::testing::ipow(g.p, k) - gcfhs::testing::ipow(g.p, k - 1)) / 2;
      o.expect(sizes[c] == expected, tag(g) + " |class " + std::to_string(c) + "|");
    }
  }
}

void cyclotomic_arbitration(Outcome& o) {
  for (std::uint64_t p : {5, 13}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t i = 0; i < 2; ++i) {
        for (std::uint32_t j = 0; j < 2; ++j) {
          const std::int64_t brute = cyclotomic_number_bruteforce(i, j, p, k);
          o.expect(cyclotomic_number_as_printed(i, j, p, k) == ExactRational(brute),
                   "printed p=" + std::to_string(p));
        }
      }
    }
  }
  for (std::uint64_t p : {3, 7, 11}) {
    o.expect(!cyclotomic_number_as_printed(0, 1, p, 1).is_integer(),
             "printed (0,1) integral at k=1 for p=" + std::to_string(p));
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const auto pk1 = static_cast<std::int64_t>(gcfhs::testing::ipow(p, k - 1));
      const std::int64_t oracle = cyclotomic_number_bruteforce(0, 1, p, k);
      o.expect(oracle == pk1 * (static_cast<std::int64_t>(p) + 1) / 4, "(0,1) oracle constant");
      for (std::uint32_t i = 0; i < 2; ++i) {
        for (std::uint32_t j = 0; j < 2; ++j) {
          o.expect(cyclotomic_number_closed(i, j, p, k) == cyclotomic_number_bruteforce(i, j, p, k),
                   "corrected p=" + std::to_string(p));
        }
      }
    }
  }
}

void autocorrelation_suite(Outcome& o) {
  for (const Instance& g : gcfhs::testing::property_grid()) {
    const FhsParams params(g.p, g.n);
    const FhsFamily family = build_family(params);
    for (std::uint32_t i = 0; i < family.size(); ++i) {
      for (std::uint64_t tau = 1; tau < params.nu(); ++tau) {
        const ClosedFormVerdict v = autocorrelation_closed(params, tau);
        const std::int64_t brute = gcfhs::testing::naive_correlation(
            family[i].symbols(), family[i].symbols(), tau);
        o.expect(v.covered && v.value == brute, tag(g) + " tau=" + std::to_string(tau));
      }
    }
  }
  const FhsFamily f2 = build_family(FhsParams(3, 2));
  const FhsFamily f3 = build_family(FhsParams(3, 3));
  o.expect(hamming_correlation(f2[0], f2[0], 3) == 7, "spot p=3 n=2 tau=3");
  o.expect(autocorrelation_closed(FhsParams(3, 2), 3).value == 7, "closed spot p=3 n=2");
  o.expect(hamming_correlation(f3[0], f3[0], 9) == 25, "spot p=3 n=3 tau=9");
  o.expect(autocorrelation_closed(FhsParams(3, 3), 9).value == 25, "closed spot p=3 n=3");
}

void crosscorrelation_suite(Outcome& o) {
  for (const Instance& g : gcfhs::testing::cross_grid()) {
    const FhsParams params(g.p, g.n);
    const FhsFamily family = build_family(params);
    for (std::uint32_t delta = 1; delta < params.m(); ++delta) {
      for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
        const ClosedFormVerdict v = crosscorrelation_closed(params, delta, tau);
        const std::int64_t brute = gcfhs::testing::naive_correlation(
            family[0].symbols(), family[delta].symbols(), tau);
        o.expect(v.covered && v.value == brute,
                 tag(g) + " delta=" + std::to_string(delta) + " tau=" + std::to_string(tau));
      }
    }
    if (g.n == 3) {
      const auto labels = gcfhs::testing::naive_class_labels(g.p, 3);
      for (std::uint32_t delta = 1; delta < 6; ++delta) {
        o.expect(crosscorrelation_closed(params, delta, 0).value == 0, "n=3 tau=0");
        for (std::uint64_t tau = 1; tau < params.nu(); ++tau) {
          const std::int64_t four_h = gcfhs::testing::n3_table_times_four(
              delta, labels[tau] / 2 + 1, labels[tau] % 2, static_cast<std::int64_t>(g.p));
          o.expect(4 * crosscorrelation_closed(params, delta, tau).value == four_h,
                   tag(g) + " table delta=" + std::to_string(delta));
        }
      }
    }
  }
  const FhsParams p3n2(3, 2);
  o.expect(crosscorrelation_closed(p3n2, 1, 0).value == 0, "spot tau=0");
  o.expect(crosscorrelation_closed(p3n2, 1, 3).value == 1, "spot tau=3");
  o.expect(crosscorrelation_closed(p3n2, 1, 2).value == 6, "spot tau=2");
}

void uniform_and_ah(Outcome& o) {
  for (const Instance& g : gcfhs::testing::property_grid()) {
    const FhsParams params(g.p, g.n);
    const FhsFamily family = build_family(params);
    const OptimalityReport r = optimality_report(family);
    for (std::uint64_t total : r.symbol_totals) o.expect(total == params.nu(), tag(g) + " N_S(f)");
    o.expect(r.uniform && r.ah.equality, tag(g) + " AH equality");

    const FhsSequence& x = family[0];
    const std::uint64_t t = params.nu() / 2;
    const OptimalityReport bent =
        optimality_report(family.with_sequence(x.with_symbol(t, (x[t] + 1) % params.m())));
    o.expect(!bent.uniform && !bent.ah.equality, tag(g) + " perturbation");
  }
  const OptimalityReport r = optimality_report(FhsParams(3, 2));
  o.expect(r.ah.lhs == ExactRational::of(1, 3) && r.ah.rhs == ExactRational::of(1, 3), "PPAB 1/3");
  o.expect(r.averages.auto_total == 56 && r.averages.cross_total == 116, "N_a, N_c");
  o.expect(r.averages.auto_average.to_fraction_string() == "7/4", "A_a");
  o.expect(r.averages.cross_average.to_fraction_string() == "58/27", "A_c");
}

void bound_evaluators(Outcome& o) {
  o.expect(lempel_greenberg_bound(9, 4).bound == 2, "LG(9,4)");
  const PengFan pf = peng_fan_bounds(9, 4, 4);
  o.expect(pf.bound1 == 3 && pf.bound2 == 3, "PF(9,4,4)");
  const OptimalityReport r = optimality_report(FhsParams(3, 2));
  o.expect(r.maxima.family_max == 7, "H(S)");
  o.expect(!r.peng_fan_optimal, "peng_fan_optimal");
  o.expect(r.ah.equality, "ah_optimal");
}

void structural_invariants(Outcome& o) {
  for (const Instance& g : gcfhs::testing::property_grid()) {
    const FhsParams params(g.p, g.n);
    const FhsFamily family = build_family(params);
    const CorrelationSet full = CorrelationSet::full(family);
    const std::uint64_t nu = params.nu();
    for (std::uint32_t i = 0; i < family.size(); ++i) {
      const auto ni = frequency_counts(family[i]);
      for (std::uint32_t j = 0; j < family.size(); ++j) {
        const auto& hij = full.values(i, j);
        const auto& hji = full.values(j, i);
        bool symmetric = true;
        std::int64_t mass = 0;
        for (std::uint64_t tau = 0; tau < nu; ++tau) {
          symmetric = symmetric && hij[tau] == hji[(nu - tau) % nu];
          mass += hij[tau];
        }
        const auto nj = frequency_counts(family[j]);
        std::int64_t expected = 0;
        for (std::size_t f = 0; f < ni.size(); ++f) expected += ni[f] * nj[f];
        o.expect(symmetric, tag(g) + " symmetry");
        o.expect(mass == expected, tag(g) + " mass");
        o.expect(hij == full.values(0, (j + params.m() - i) % params.m()), tag(g) + " delta-only");
      }
    }
  }
}

void cli_contract(Outcome& o) {
  for (const gcfhs::cli::GoldenCase& g : gcfhs::cli::golden_cases()) {
    std::vector<std::string> args{"gcfhs"};
    args.insert(args.end(), g.args.begin(), g.args.end());
    std::ostringstream first, second, err;
    const int code = gcfhs::cli::run(args, first, err);
    gcfhs::cli::run(args, second, err);
    const std::string golden = gcfhs::cli::read_golden(g.file);
    o.expect(code == 0 && !golden.empty() && first.str() == golden, "golden " + g.file);
    o.expect(first.str() == second.str(), "byte-stable " + g.file);
  }

  const auto ledger = std::filesystem::temp_directory_path() / "gcfhs_acceptance_errata.jsonl";
  std::filesystem::remove(ledger);
  std::ostringstream out, err;
  const int grid_code = gcfhs::cli::run(
      {"gcfhs", "verify", "--p", "3,5,7,11,13", "--n", "2,3", "--errata", ledger.string()}, out, err);
  const int deep_code = gcfhs::cli::run(
      {"gcfhs", "verify", "--p", "3", "--n", "4,5", "--errata", ledger.string()}, out, err);
  o.expect(grid_code == 0 && deep_code == 0, "verify exit status");
  std::ifstream in(ledger);
  bool zero_one = false;
  for (std::string line; std::getline(in, line);) {
    const auto entry = nlohmann::json::parse(line);
    zero_one = zero_one || entry.value("location", "") == "cyclotomic-number/p=3mod4/(0,1)";
  }
  o.expect(zero_one, "ledger has the (0,1) entry");
  std::filesystem::remove(ledger);
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no stated budget
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "partition and cardinality", 5, partition_suite},
      {2, "cyclotomic-number arbitration", 1, cyclotomic_arbitration},
      {3, "autocorrelation closed form", 30, autocorrelation_suite},
      {4, "cross-correlation closed form", 60, crosscorrelation_suite},
      {5, "uniform distribution and AH optimality", 10, uniform_and_ah},
      {6, "bound evaluators", 1, bound_evaluators},
      {7, "structural invariants", 0, structural_invariants},
      {8, "CLI contract", 0, cli_contract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_seconds == 0 || seconds < c.budget_seconds;
    const bool ok = outcome.ok() && in_budget;
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.3fs%s) - %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                seconds, in_budget ? "" : ", over budget", outcome.summary().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
