#include "gcfhs/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gcfhs/bounds.hpp"
#include "gcfhs/correlation.hpp"
#include "gcfhs/verify.hpp"

namespace gcfhs::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };
enum class Mode { kBrute, kClosed, kBoth };

struct RunManifest {
  std::string command;
  Format format = Format::kCsv;
  int exit_status = kExitOk;
  std::uint64_t checks_passed = 0;
  std::uint64_t checks_failed = 0;
  std::uint64_t errata_emitted = 0;
};

std::string format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

Json params_json(const FhsParams& params) {
  return Json{{"p", params.p()}, {"n", params.n()}, {"nu", params.nu()},
              {"m", params.m()}, {"M", params.M()}};
}

Json manifest_json(const RunManifest& m) {
  return Json{{"command", m.command},
              {"format", format_name(m.format)},
              {"exit_status", m.exit_status},
              {"checks_passed", m.checks_passed},
              {"checks_failed", m.checks_failed},
              {"errata_emitted", m.errata_emitted}};
}

void write_document(std::ostream& out, Json params, Json payload, const RunManifest& m) {
  Json doc;
  doc["params"] = std::move(params);
  doc["payload"] = std::move(payload);
  doc["manifest"] = manifest_json(m);
  out << doc.dump(2) << '\n';
}

FhsParams make_params(std::uint64_t p, std::uint32_t n) {
  try {
    return FhsParams(p, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid instance p=" + std::to_string(p) + " n=" + std::to_string(n) +
                     ": " + e.what());
  }
}

void require_desk_budget(const FhsParams& params) {
  if (params.nu() > kDeskBudgetLength) {
    throw UsageError("refusing p=" + std::to_string(params.p()) + " n=" +
                     std::to_string(params.n()) + ": length " + std::to_string(params.nu()) +
                     " exceeds the correlation budget of " + std::to_string(kDeskBudgetLength));
  }
}

// ---- generate ------------------------------------------------------------

int cmd_generate(std::uint64_t p, std::uint32_t n, std::optional<std::uint32_t> seq,
                 Format format, std::ostream& out) {
  const FhsParams params = make_params(p, n);
  if (seq && *seq >= params.M()) {
    throw UsageError("--seq must lie in [0, " + std::to_string(params.M()) + ")");
  }
  std::vector<FhsSequence> sequences;
  if (seq) {
    sequences.push_back(build_sequence(*seq, params));
  } else {
    sequences = build_family(params).sequences();
  }

  RunManifest manifest{"generate", format};
  if (format == Format::kCsv) {
    out << "index";
    for (std::uint64_t t = 0; t < params.nu(); ++t) out << ",t" << t;
    out << '\n';
    for (const FhsSequence& x : sequences) {
      out << x.seq_index();
      for (Symbol s : x.symbols()) out << ',' << static_cast<int>(s);
      out << '\n';
    }
    return kExitOk;
  }
  Json list = Json::array();
  for (const FhsSequence& x : sequences) {
    Json symbols = Json::array();
    for (Symbol s : x.symbols()) symbols.push_back(static_cast<int>(s));
    list.push_back(Json{{"index", x.seq_index()}, {"symbols", std::move(symbols)}});
  }
  write_document(out, params_json(params), Json{{"sequences", std::move(list)}}, manifest);
  return kExitOk;
}

// ---- correlate -----------------------------------------------------------

int cmd_correlate(std::uint64_t p, std::uint32_t n, std::uint32_t i, std::uint32_t j, Mode mode,
                  Format format, std::ostream& out) {
  const FhsParams params = make_params(p, n);
  if (i >= params.M() || j >= params.M()) {
    throw UsageError("--pair indices must lie in [0, " + std::to_string(params.M()) + ")");
  }
  require_desk_budget(params);

  std::vector<std::int64_t> brute;
  if (mode != Mode::kClosed) {
    const FhsFamily family = build_family(params);
    brute = correlation_table(family, i, j).values;
  }
  std::vector<ClosedFormVerdict> closed;
  if (mode != Mode::kBrute) {
    closed.reserve(params.nu());
    for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
      closed.push_back(correlation_closed(params, i, j, tau));
    }
  }

  RunManifest manifest{"correlate", format};
  std::uint64_t mismatches = 0;
  if (mode == Mode::kBoth) {
    for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
      if (!closed[tau].covered) continue;
      closed[tau].value == brute[tau] ? ++manifest.checks_passed : ++mismatches;
    }
  }
  manifest.checks_failed = mismatches;
  manifest.exit_status = mismatches > 0 ? kExitCheckFailure : kExitOk;

  if (format == Format::kCsv) {
    switch (mode) {
      case Mode::kBrute: out << "tau,brute\n"; break;
      case Mode::kClosed: out << "tau,closed,covered\n"; break;
      case Mode::kBoth: out << "tau,brute,closed,covered,match\n"; break;
    }
    for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
      out << tau;
      if (mode != Mode::kClosed) out << ',' << brute[tau];
      if (mode != Mode::kBrute) {
        const ClosedFormVerdict& v = closed[tau];
        out << ',';
        if (v.covered) out << v.value;
        out << ',' << (v.covered ? 1 : 0);
        if (mode == Mode::kBoth) {
          out << ',';
          if (v.covered) out << (v.value == brute[tau] ? 1 : 0);
        }
      }
      out << '\n';
    }
    return manifest.exit_status;
  }

  Json rows = Json::array();
  for (std::uint64_t tau = 0; tau < params.nu(); ++tau) {
    Json row{{"tau", tau}};
    if (mode != Mode::kClosed) row["brute"] = brute[tau];
    if (mode != Mode::kBrute) {
      const ClosedFormVerdict& v = closed[tau];
      row["closed"] = v.covered ? Json(v.value) : Json(nullptr);
      row["covered"] = v.covered;
      row["rule"] = v.rule;
      if (mode == Mode::kBoth) row["match"] = v.covered ? Json(v.value == brute[tau]) : Json(nullptr);
    }
    rows.push_back(std::move(row));
  }
  static const char* kModeNames[] = {"brute", "closed", "both"};
  Json payload{{"pair", {i, j}},
               {"mode", kModeNames[static_cast<int>(mode)]},
               {"rows", std::move(rows)},
               {"mismatches", mismatches}};
  write_document(out, params_json(params), std::move(payload), manifest);
  return manifest.exit_status;
}

// ---- bounds --------------------------------------------------------------

int cmd_bounds(std::uint64_t p, std::uint32_t n, Format format, std::ostream& out) {
  const FhsParams params = make_params(p, n);
  require_desk_budget(params);
  const OptimalityReport r = optimality_report(params);

  RunManifest manifest{"bounds", format};
  // The two relations every family must satisfy.
  const bool bound_holds = r.ah.lhs >= r.ah.rhs;
  const bool equivalence_holds = r.ah.equality == r.uniform;
  manifest.checks_passed = (bound_holds ? 1 : 0) + (equivalence_holds ? 1 : 0);
  manifest.checks_failed = 2 - manifest.checks_passed;
  manifest.exit_status = manifest.checks_failed > 0 ? kExitCheckFailure : kExitOk;

  bool lg_all = true;
  for (bool b : r.lempel_greenberg_attained) lg_all = lg_all && b;

  if (format == Format::kCsv) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "field,value\n";
    out << "lempel_greenberg," << r.lempel_greenberg.bound << '\n';
    out << "lempel_greenberg_corollary," << r.lempel_greenberg.corollary << '\n';
    for (std::size_t i = 0; i < r.maxima.auto_max.size(); ++i) {
      out << "H_X" << i << ',' << r.maxima.auto_max[i] << '\n';
    }
    out << "lempel_greenberg_optimal," << b(lg_all) << '\n';
    out << "peng_fan_1," << r.peng_fan.bound1 << '\n';
    out << "peng_fan_2," << r.peng_fan.bound2 << '\n';
    out << "H_cross," << r.maxima.max_cross << '\n';
    out << "H_S," << r.maxima.family_max << '\n';
    out << "peng_fan_optimal," << b(r.peng_fan_optimal) << '\n';
    out << "N_a," << r.averages.auto_total << '\n';
    out << "N_c," << r.averages.cross_total << '\n';
    out << "A_a," << r.averages.auto_average.to_fraction_string() << '\n';
    out << "A_c," << r.averages.cross_average.to_fraction_string() << '\n';
    out << "ah_lhs," << r.ah.lhs.to_fraction_string() << '\n';
    out << "ah_rhs," << r.ah.rhs.to_fraction_string() << '\n';
    out << "ah_equality," << b(r.ah.equality) << '\n';
    out << "ah_optimal," << b(r.ah.equality) << '\n';
    out << "uniform," << b(r.uniform) << '\n';
    return manifest.exit_status;
  }

  Json payload;
  payload["lempel_greenberg"] = Json{{"bound", r.lempel_greenberg.bound},
                                     {"corollary", r.lempel_greenberg.corollary},
                                     {"H_X", r.maxima.auto_max},
                                     {"attained", r.lempel_greenberg_attained}};
  payload["lempel_greenberg_optimal"] = lg_all;
  payload["peng_fan"] = {r.peng_fan.bound1, r.peng_fan.bound2};
  payload["H_cross"] = r.maxima.max_cross;
  payload["H_S"] = r.maxima.family_max;
  payload["peng_fan_optimal"] = r.peng_fan_optimal;
  payload["N_a"] = r.averages.auto_total;
  payload["N_c"] = r.averages.cross_total;
  payload["A_a"] = r.averages.auto_average.to_fraction_string();
  payload["A_c"] = r.averages.cross_average.to_fraction_string();
  payload["ah_lhs"] = r.ah.lhs.to_fraction_string();
  payload["ah_rhs"] = r.ah.rhs.to_fraction_string();
  payload["ah_equality"] = r.ah.equality;
  payload["ah_optimal"] = r.ah.equality;
  payload["uniform"] = r.uniform;
  payload["symbol_totals"] = r.symbol_totals;
  write_document(out, params_json(params), std::move(payload), manifest);
  return manifest.exit_status;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const std::vector<std::uint64_t>& ps, const std::vector<std::uint32_t>& ns,
               Format format, const std::string& errata_path, std::ostream& out,
               std::ostream& err) {
  std::vector<FhsParams> grid;
  for (std::uint64_t p : ps) {
    for (std::uint32_t n : ns) {
      grid.push_back(make_params(p, n));
      require_desk_budget(grid.back());
    }
  }

  RunManifest manifest{"verify", format};
  std::vector<InstanceVerification> results;
  std::vector<ErrataEntry> errata;
  for (const FhsParams& params : grid) {
    results.push_back(verify_instance(params));
    for (const CheckResult& c : results.back().checks) {
      manifest.checks_passed += c.passed;
      manifest.checks_failed += c.failed;
    }
    for (const ErrataEntry& e : results.back().errata) errata.push_back(e);
  }
  manifest.errata_emitted = errata.size();
  manifest.exit_status = manifest.checks_failed > 0 ? kExitCheckFailure : kExitOk;

  if (!errata_path.empty()) {
    std::ofstream ledger(errata_path, std::ios::app);
    if (!ledger) throw UsageError("cannot open errata ledger " + errata_path);
    for (const ErrataEntry& e : errata) ledger << to_json(e).dump() << '\n';
  }
  for (const InstanceVerification& r : results) {
    for (const Discrepancy& d : r.discrepancies) {
      err << "mismatch p=" << d.params.p() << " n=" << d.params.n() << " pair=(" << d.i << ','
          << d.j << ") tau=" << d.tau << " brute=" << d.brute << " closed=" << d.closed
          << " rule=" << d.rule << '\n';
    }
  }

  if (format == Format::kCsv) {
    out << "p,n,check,passed,failed\n";
    for (const InstanceVerification& r : results) {
      for (const CheckResult& c : r.checks) {
        out << r.params.p() << ',' << r.params.n() << ',' << c.name << ',' << c.passed << ','
            << c.failed << '\n';
      }
    }
    return manifest.exit_status;
  }

  Json instances = Json::array();
  for (const InstanceVerification& r : results) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    }
    instances.push_back(Json{{"p", r.params.p()},
                             {"n", r.params.n()},
                             {"ok", r.ok()},
                             {"checks", std::move(checks)},
                             {"discrepancies", r.discrepancies.size()}});
  }
  Json ledger = Json::array();
  for (const ErrataEntry& e : errata) ledger.push_back(to_json(e));
  write_document(out, Json{{"p", ps}, {"n", ns}},
                 Json{{"instances", std::move(instances)}, {"errata", std::move(ledger)}},
                 manifest);
  return manifest.exit_status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequency-hopping sequences from order-2 generalized cyclotomy"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::kCsv}, {"json", Format::kJson}};
  const std::map<std::string, Mode> modes{
      {"brute", Mode::kBrute}, {"closed", Mode::kClosed}, {"both", Mode::kBoth}};

  std::uint64_t p = 0;
  std::uint32_t n = 0;
  Format format = Format::kCsv;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Odd prime p")->required();
    sub->add_option("--n", n, "Exponent n >= 2")->required();
    add_common(sub);
  };

  CLI::App* generate = app.add_subcommand("generate", "Emit sequences of the family");
  add_instance(generate);
  std::optional<std::uint32_t> seq;
  generate->add_option("--seq", seq, "Single sequence index (default: whole family)");

  CLI::App* correlate = app.add_subcommand("correlate", "Hamming correlation table of a pair");
  add_instance(correlate);
  std::vector<std::uint32_t> pair;
  correlate->add_option("--pair", pair, "Sequence indices i j")->expected(2)->required();
  Mode mode = Mode::kBoth;
  correlate->add_option("--mode", mode, "brute|closed|both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  CLI::App* bounds = app.add_subcommand("bounds", "Optimality report");
  add_instance(bounds);

  CLI::App* verify = app.add_subcommand("verify", "Closed forms against brute force over a grid");
  std::vector<std::uint64_t> ps;
  std::vector<std::uint32_t> ns;
  verify->add_option("--p", ps, "Odd primes, comma separated")->required()->delimiter(',');
  verify->add_option("--n", ns, "Exponents, comma separated")->required()->delimiter(',');
  std::string errata_path = "errata.jsonl";
  verify->add_option("--errata", errata_path, "Append errata ledger lines to PATH ('' to skip)");
  add_common(verify);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) {
      err << "error: cannot open " << out_path << '\n';
      return kExitUsage;
    }
    sink = file.get();
  }

  try {
    if (generate->parsed()) return cmd_generate(p, n, seq, format, *sink);
    if (correlate->parsed()) return cmd_correlate(p, n, pair[0], pair[1], mode, format, *sink);
    if (bounds->parsed()) return cmd_bounds(p, n, format, *sink);
    return cmd_verify(ps, ns, format, errata_path, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gcfhs::cli
