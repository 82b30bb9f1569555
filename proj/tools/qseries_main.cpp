// Command-line front end: expand eta quotients, evaluate the partition
// oracle, verify single congruence claims, replay the two congruence-family
// proofs, and scan progressions for new candidates.
//
// Exit codes: 0 success (claims verified), 1 counterexample found,
// 2 usage or parse error, 3 coefficient budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/io.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace {

struct CommonOptions {
  std::string format = "plain";
  std::string output;
  int threads = 1;
  bool accelerated = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output,
                  "Write output to this file instead of stdout");
  cmd->add_option("--threads", opts.threads, "Worker thread count")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd->add_flag("--accelerated-multiply", opts.accelerated,
                "Use the NTT multiplication kernel where applicable "
                "(identical results, different speed)");
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + opts.output);
  }
  out << text;
}

// The plain/json/csv distinction only makes sense per payload type, so each
// command whitelists what it supports.
void require_format(const CommonOptions& opts,
                    const std::vector<std::string>& allowed) {
  for (const std::string& f : allowed) {
    if (opts.format == f) return;
  }
  throw qs::parse_error("format '" + opts.format +
                            "' is not supported by this command",
                        0);
}

qs::Family parse_family(const std::string& name) {
  if (name == "classical") return qs::Family::classical_partition;
  if (name == "cubic") return qs::Family::generalized_cubic;
  if (name == "b") return qs::Family::b_function;
  throw qs::parse_error("unknown family '" + name + "'", 0);
}

void check_budget_for(const std::string& where, long long coefficients) {
  if (coefficients > qs::coefficient_budget()) {
    throw qs::budget_error(where, coefficients, qs::coefficient_budget());
  }
}

int run_expand(const CommonOptions& opts, const std::string& expr,
               long long n, std::uint32_t modulus, bool has_modulus) {
  check_budget_for("expand", n + 1);
  const qs::CoefficientRing ring = has_modulus
                                       ? qs::CoefficientRing::modular(modulus)
                                       : qs::CoefficientRing::exact();
  const qs::EtaQuotient quotient = qs::EtaQuotient::parse(expr);
  const qs::PowerSeries series = qs::expand(quotient, n, ring);
  if (opts.format == "json") {
    emit(opts, qs::series_to_json(series));
  } else if (opts.format == "csv") {
    emit(opts, qs::series_to_csv(series));
  } else {
    emit(opts, qs::series_to_plain(series));
  }
  return 0;
}

int run_oracle(const CommonOptions& opts, long long colors, long long n) {
  require_format(opts, {"plain", "json", "csv"});
  const qs::Integer value = qs::a_c_oracle(colors, n);
  if (opts.format == "json") {
    emit(opts, "{\"colors\":" + std::to_string(colors) +
                   ",\"n\":" + std::to_string(n) + ",\"value\":\"" +
                   value.get_str() + "\"}\n");
  } else if (opts.format == "csv") {
    emit(opts, "colors,n,value\n" + std::to_string(colors) + "," +
                   std::to_string(n) + "," + value.get_str() + "\n");
  } else {
    emit(opts, value.get_str() + "\n");
  }
  return 0;
}

int run_verify(const CommonOptions& opts, const qs::CongruenceClaim& claim,
               long long terms) {
  require_format(opts, {"plain", "json"});
  const qs::VerificationReport report = qs::verify_claim(claim, terms);
  emit(opts, opts.format == "json" ? qs::report_to_json(report)
                                   : qs::report_to_plain(report));
  return report.status == qs::VerifyStatus::verified ? 0 : 1;
}

int run_replay(const CommonOptions& opts, std::uint32_t prime,
               long long c_max, long long n) {
  require_format(opts, {"plain", "json"});
  const std::vector<qs::VerificationReport> reports =
      qs::replay_proof(prime, c_max, n);
  bool all_verified = true;
  std::string out;
  for (const qs::VerificationReport& r : reports) {
    if (r.status != qs::VerifyStatus::verified) all_verified = false;
    if (opts.format == "plain") out += qs::report_to_plain(r);
  }
  if (opts.format == "json") out = qs::reports_to_json(reports);
  emit(opts, out);
  return all_verified ? 0 : 1;
}

int run_scan(const CommonOptions& opts, const std::string& family_name,
             long long colors, std::uint32_t modulus,
             const std::vector<long long>& steps, long long terms) {
  require_format(opts, {"plain", "json"});
  const qs::Family family = parse_family(family_name);
  const qs::ScanOutcome outcome =
      qs::scan_congruences(family, colors, modulus, steps, terms, opts.threads);
  std::string out;
  if (opts.format == "json") {
    out = "{\"candidates\":[";
    for (std::size_t i = 0; i < outcome.candidates.size(); ++i) {
      std::string line = qs::claim_to_json(outcome.candidates[i]);
      line.pop_back();  // trailing newline
      out += (i ? "," : "") + line;
    }
    out += "],\"reports\":";
    std::string reports = qs::reports_to_json(outcome.reports);
    reports.pop_back();
    out += reports + "}\n";
  } else {
    // Plain scan output is JSON lines: one claim per line, then the
    // per-step reports, so it can be consumed line by line.
    for (const qs::CongruenceClaim& c : outcome.candidates) {
      out += qs::claim_to_json(c);
    }
    for (const qs::VerificationReport& r : outcome.reports) {
      out += qs::report_to_json(r);
    }
  }
  emit(opts, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated q-series engine and partition congruence verifier"};
  app.require_subcommand(1);

  CommonOptions opts;

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "Expand an eta quotient such as "
                                   "\"f1^-1 * f2^-4\" to a series");
  std::string expr;
  long long expand_n = 0;
  std::uint32_t expand_mod = 0;
  expand_cmd->add_option("expr", expr, "Eta quotient expression")->required();
  expand_cmd->add_option("--n", expand_n, "Truncation order (inclusive)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* expand_mod_opt = expand_cmd->add_option(
      "--mod", expand_mod, "Reduce coefficients modulo this (2..2^31)");
  add_common(expand_cmd, opts);

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Count generalized cubic partitions directly (no series)");
  long long oracle_c = 1;
  long long oracle_n = 0;
  oracle_cmd->add_option("--c", oracle_c, "Number of colors for even parts")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--n", oracle_n, "Argument n")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(oracle_cmd, opts);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check one congruence claim family(An+B) = 0 mod M");
  std::string verify_family = "classical";
  long long verify_c = 1;
  long long verify_a = 1;
  long long verify_b = 0;
  std::uint32_t verify_mod = 2;
  long long verify_terms = 0;
  verify_cmd->add_option("--family", verify_family,
                         "classical | cubic | b")
      ->check(CLI::IsMember({"classical", "cubic", "b"}))
      ->capture_default_str();
  verify_cmd->add_option("--c", verify_c,
                         "Color count (cubic family only, >= 1)");
  verify_cmd->add_option("--A", verify_a, "Progression step")->required();
  verify_cmd->add_option("--B", verify_b, "Progression offset")->required();
  verify_cmd->add_option("--mod", verify_mod, "Modulus")->required();
  verify_cmd->add_option("--terms", verify_terms, "Check n = 0..terms")
      ->required();
  add_common(verify_cmd, opts);

  // replay
  auto* replay_cmd = app.add_subcommand(
      "replay", "Replay the proof of the mod-7 / mod-11 congruence family");
  std::uint32_t replay_prime = 7;
  long long replay_cmax = 0;
  long long replay_n = 0;
  replay_cmd->add_option("--prime", replay_prime, "7 or 11")
      ->required()
      ->check(CLI::IsMember({7, 11}));
  replay_cmd->add_option("--cmax", replay_cmax, "Replay c = 0..cmax")
      ->required()
      ->check(CLI::NonNegativeNumber);
  replay_cmd->add_option("--n", replay_n, "Working truncation")->required();
  add_common(replay_cmd, opts);

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "Scan offsets B < A for candidate congruences");
  std::string scan_family = "classical";
  long long scan_c = 1;
  std::uint32_t scan_mod = 2;
  std::vector<long long> scan_steps;
  long long scan_terms = 199;
  scan_cmd->add_option("--family", scan_family, "classical | cubic | b")
      ->check(CLI::IsMember({"classical", "cubic", "b"}))
      ->capture_default_str();
  scan_cmd->add_option("--c", scan_c, "Color count (cubic family only)");
  scan_cmd->add_option("--mod", scan_mod, "Modulus")->required();
  scan_cmd->add_option("--A", scan_steps, "Progression steps, e.g. 5,7,25")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("--terms", scan_terms, "Witness range n = 0..terms")
      ->capture_default_str();
  add_common(scan_cmd, opts);

  int rc = 0;
  expand_cmd->callback([&] {
    qs::set_accelerated_multiply(opts.accelerated);
    rc = run_expand(opts, expr, expand_n, expand_mod,
                    expand_mod_opt->count() > 0);
  });
  oracle_cmd->callback([&] { rc = run_oracle(opts, oracle_c, oracle_n); });
  verify_cmd->callback([&] {
    qs::set_accelerated_multiply(opts.accelerated);
    qs::CongruenceClaim claim;
    claim.family = parse_family(verify_family);
    claim.colors = verify_c;
    claim.step = verify_a;
    claim.offset = verify_b;
    claim.modulus = verify_mod;
    claim.n_max = verify_terms;
    rc = run_verify(opts, claim, verify_terms);
  });
  replay_cmd->callback([&] {
    qs::set_accelerated_multiply(opts.accelerated);
    rc = run_replay(opts, replay_prime, replay_cmax, replay_n);
  });
  scan_cmd->callback([&] {
    qs::set_accelerated_multiply(opts.accelerated);
    rc = run_scan(opts, scan_family, scan_c, scan_mod, scan_steps, scan_terms);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qs::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const qs::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
