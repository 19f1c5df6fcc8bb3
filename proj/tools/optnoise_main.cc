// Copyright 2026 The OptNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// optnoise CLI: construct and sample (0,delta)-DP noise mechanisms, compute
// optima, audit samplers, and emit optimal-vs-Gaussian comparison tables.
//
// Exit codes: 0 success, 2 flag/domain error, 3 output write error,
// 4 input parse error. Numeric output carries 12 significant digits and is
// byte-reproducible for identical flags and --seed.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "optnoise/audit.h"
#include "optnoise/curve.h"
#include "optnoise/errors.h"
#include "optnoise/format.h"
#include "optnoise/gaussian.h"
#include "optnoise/json_io.h"
#include "optnoise/optimal.h"
#include "optnoise/palpha.h"
#include "optnoise/random.h"

namespace {

using nlohmann::json;
using optnoise::fmt_g12;
using optnoise::round12;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitWrite = 3;
constexpr int kExitParse = 4;

struct CommonFlags {
  double delta = 0.0;
  double sensitivity = 1.0;
  double n = 1.0;
  std::string format = "json";
  std::string convention = "sigmapower";
};

optnoise::CostConvention parse_convention(const std::string& name) {
  if (name == "sigmapower") {
    return optnoise::CostConvention::kSigmaPower;
  }
  if (name == "exactmoment") {
    return optnoise::CostConvention::kExactMoment;
  }
  throw optnoise::DomainError("convention",
                              "convention must be sigmapower or exactmoment");
}

void emit_record(const std::string& format, const json& record) {
  if (format == "json") {
    std::cout << record.dump() << "\n";
    return;
  }
  if (format == "csv") {
    std::string header;
    std::string row;
    for (auto it = record.begin(); it != record.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += it.value().is_number_float()
                 ? fmt_g12(it.value().get<double>())
                 : (it.value().is_string() ? it.value().get<std::string>()
                                           : it.value().dump());
    }
    std::cout << header << "\n" << row << "\n";
    return;
  }
  // Aligned text.
  std::size_t width = 0;
  for (auto it = record.begin(); it != record.end(); ++it) {
    width = std::max(width, it.key().size());
  }
  for (auto it = record.begin(); it != record.end(); ++it) {
    std::cout << it.key() << std::string(width - it.key().size(), ' ')
              << " = "
              << (it.value().is_number_float()
                      ? fmt_g12(it.value().get<double>())
                      : (it.value().is_string()
                             ? it.value().get<std::string>()
                             : it.value().dump()))
              << "\n";
  }
}

int run_optimal(const CommonFlags& flags) {
  const optnoise::OptimalResult result =
      optnoise::optimal_ln(flags.delta, flags.sensitivity, flags.n);
  json record;
  record["delta"] = round12(flags.delta);
  record["sensitivity"] = round12(flags.sensitivity);
  record["n"] = round12(flags.n);
  record["alpha_star"] = round12(result.alpha_star);
  record["half_width"] = round12(result.dist.half_width());
  record["density"] = round12(result.dist.density());
  record["min_cost"] = round12(result.min_cost);
  emit_record(flags.format, record);
  return kExitOk;
}

int run_compare(const CommonFlags& flags) {
  const optnoise::CurveRow row =
      optnoise::compare_costs(flags.delta, flags.sensitivity, flags.n,
                              parse_convention(flags.convention));
  json record;
  record["delta"] = round12(flags.delta);
  record["sensitivity"] = round12(flags.sensitivity);
  record["n"] = round12(flags.n);
  record["convention"] = flags.convention;
  record["gaussian_cost"] = round12(row.gaussian_cost);
  record["optimal_cost"] = round12(row.optimal_cost);
  record["ratio"] = round12(row.ratio);
  emit_record(flags.format, record);
  return kExitOk;
}

struct SampleFlags {
  CommonFlags common;
  std::string mechanism = "palpha";
  double alpha = 0.0;
  bool alpha_set = false;
  bool use_optimal = false;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
};

int run_sample(const SampleFlags& flags) {
  optnoise::RandomStream rng(flags.seed);
  std::ostringstream buffer;
  if (flags.mechanism == "palpha") {
    if (flags.alpha_set == flags.use_optimal) {
      throw optnoise::DomainError(
          "alpha", "specify exactly one of --alpha and --optimal");
    }
    const double alpha =
        flags.use_optimal
            ? optnoise::optimal_alpha_ln(flags.common.delta, flags.common.n)
            : flags.alpha;
    const optnoise::PAlphaDist dist(flags.common.delta,
                                    flags.common.sensitivity, alpha);
    for (std::uint64_t i = 0; i < flags.count; ++i) {
      buffer << fmt_g12(dist.sample(rng)) << '\n';
    }
  } else if (flags.mechanism == "gaussian") {
    if (flags.alpha_set || flags.use_optimal) {
      throw optnoise::DomainError(
          "alpha", "--alpha/--optimal apply only to the palpha mechanism");
    }
    const optnoise::GaussianBaseline baseline = optnoise::calibrate_gaussian(
        flags.common.delta, flags.common.sensitivity);
    for (std::uint64_t i = 0; i < flags.count; ++i) {
      buffer << fmt_g12(optnoise::sample_gaussian(baseline, rng)) << '\n';
    }
  } else {
    throw optnoise::DomainError("mechanism",
                                "mechanism must be palpha or gaussian");
  }
  std::cout << buffer.str();
  return kExitOk;
}

struct CurveFlags {
  CommonFlags common;
  double delta_min = 0.01;
  double delta_max = 0.99;
  double step = 0.01;
  std::string out_path;
};

int run_curve(const CurveFlags& flags) {
  const optnoise::CurveTable table = optnoise::build_curve(
      flags.common.n, flags.common.sensitivity, flags.delta_min,
      flags.delta_max, flags.step, parse_convention(flags.common.convention));
  std::ofstream out(flags.out_path);
  if (!out) {
    std::cerr << "error: cannot open '" << flags.out_path
              << "' for writing\n";
    return kExitWrite;
  }
  optnoise::write_curve_csv(out, table);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing '" << flags.out_path << "'\n";
    return kExitWrite;
  }
  return kExitOk;
}

struct AuditFlags {
  CommonFlags common;
  std::string input_path;
  std::string mechanism;
  std::string histogram_out;
  double alpha = 0.0;
  double sigma = 0.0;
  bool sigma_set = false;
  bool analytic = false;
  std::uint64_t count = 1000000;
  std::uint64_t seed = 0;
  int bins = 2000;
  int shifts = 64;
};

int write_audit_histogram(const std::string& path,
                          const std::vector<double>& samples,
                          double sensitivity, int bins) {
  const optnoise::Histogram h =
      optnoise::audit_histogram(samples, sensitivity, bins);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitWrite;
  }
  optnoise::write_histogram_csv(out, h);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing '" << path << "'\n";
    return kExitWrite;
  }
  return kExitOk;
}

int run_audit(const AuditFlags& flags) {
  const bool from_file = !flags.input_path.empty();
  if (from_file == !flags.mechanism.empty()) {
    throw optnoise::DomainError(
        "input", "specify exactly one of --input and --mechanism");
  }

  optnoise::AuditReport report;
  std::vector<double> samples;
  if (from_file) {
    std::ifstream in(flags.input_path);
    if (!in) {
      std::cerr << "error: cannot open '" << flags.input_path << "'\n";
      return kExitParse;
    }
    samples = optnoise::parse_samples(in);
  } else if (flags.mechanism == "palpha") {
    const optnoise::PAlphaDist dist(flags.common.delta,
                                    flags.common.sensitivity, flags.alpha);
    if (flags.analytic) {
      report = optnoise::analytic_delta_palpha(dist);
    } else {
      optnoise::RandomStream rng(flags.seed);
      samples.resize(flags.count);
      for (double& x : samples) {
        x = dist.sample(rng);
      }
    }
  } else if (flags.mechanism == "gaussian") {
    const double sigma =
        flags.sigma_set
            ? flags.sigma
            : optnoise::calibrate_gaussian(flags.common.delta,
                                           flags.common.sensitivity)
                  .sigma;
    if (flags.analytic) {
      report =
          optnoise::analytic_delta_gaussian(sigma, flags.common.sensitivity);
    } else {
      optnoise::RandomStream rng(flags.seed);
      samples.resize(flags.count);
      for (double& x : samples) {
        x = optnoise::sample_gaussian(sigma, rng);
      }
    }
  } else {
    throw optnoise::DomainError("mechanism",
                                "mechanism must be palpha or gaussian");
  }

  if (!samples.empty()) {
    report = optnoise::empirical_delta(samples, flags.common.sensitivity,
                                       flags.bins, flags.shifts);
  }
  if (!flags.histogram_out.empty()) {
    if (samples.empty()) {
      throw optnoise::DomainError(
          "histogram_out", "--histogram-out requires an empirical audit");
    }
    const int rc = write_audit_histogram(flags.histogram_out, samples,
                                         flags.common.sensitivity, flags.bins);
    if (rc != kExitOk) {
      return rc;
    }
  }

  emit_record(flags.common.format, optnoise::audit_report_to_json(report));
  return kExitOk;
}

void add_format_flag(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{
      "optnoise: optimal uniform-with-atom noise for (0,delta)-differential "
      "privacy, with a Gaussian baseline and privacy auditing"};
  app.require_subcommand(1);

  CommonFlags optimal_flags;
  CLI::App* cmd_optimal = app.add_subcommand(
      "optimal", "Optimal atom, support, and minimum |x|^n cost");
  cmd_optimal->add_option("--delta", optimal_flags.delta, "Privacy parameter")
      ->required();
  cmd_optimal->add_option("--sensitivity", optimal_flags.sensitivity,
                          "Query sensitivity");
  cmd_optimal->add_option("--n", optimal_flags.n, "Cost exponent");
  add_format_flag(cmd_optimal, &optimal_flags);

  CommonFlags compare_flags;
  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "Optimal vs Gaussian cost at one delta");
  cmd_compare->add_option("--delta", compare_flags.delta, "Privacy parameter")
      ->required();
  cmd_compare->add_option("--sensitivity", compare_flags.sensitivity,
                          "Query sensitivity");
  cmd_compare->add_option("--n", compare_flags.n, "Cost exponent");
  cmd_compare
      ->add_option("--convention", compare_flags.convention,
                   "Gaussian cost convention")
      ->check(CLI::IsMember({"sigmapower", "exactmoment"}));
  add_format_flag(cmd_compare, &compare_flags);

  SampleFlags sample_flags;
  CLI::App* cmd_sample =
      app.add_subcommand("sample", "Emit noise draws, one per line");
  cmd_sample
      ->add_option("--mechanism", sample_flags.mechanism, "Noise mechanism")
      ->check(CLI::IsMember({"palpha", "gaussian"}));
  cmd_sample->add_option("--delta", sample_flags.common.delta,
                         "Privacy parameter")
      ->required();
  cmd_sample->add_option("--sensitivity", sample_flags.common.sensitivity,
                         "Query sensitivity");
  CLI::Option* alpha_opt =
      cmd_sample->add_option("--alpha", sample_flags.alpha, "Origin mass");
  cmd_sample->add_flag("--optimal", sample_flags.use_optimal,
                       "Use the optimal alpha for the --n cost");
  cmd_sample->add_option("--n", sample_flags.common.n,
                         "Cost exponent for --optimal");
  cmd_sample->add_option("--count", sample_flags.count, "Number of draws");
  cmd_sample->add_option("--seed", sample_flags.seed, "RNG seed");

  CurveFlags curve_flags;
  CLI::App* cmd_curve = app.add_subcommand(
      "curve", "Write the per-delta optimal/Gaussian cost table as CSV");
  cmd_curve->add_option("--n", curve_flags.common.n, "Cost exponent");
  cmd_curve->add_option("--sensitivity", curve_flags.common.sensitivity,
                        "Query sensitivity");
  cmd_curve->add_option("--delta-min", curve_flags.delta_min, "First delta");
  cmd_curve->add_option("--delta-max", curve_flags.delta_max, "Last delta");
  cmd_curve->add_option("--step", curve_flags.step, "Delta increment");
  cmd_curve
      ->add_option("--convention", curve_flags.common.convention,
                   "Gaussian cost convention")
      ->check(CLI::IsMember({"sigmapower", "exactmoment"}));
  cmd_curve->add_option("--out", curve_flags.out_path, "Output CSV path")
      ->required();

  AuditFlags audit_flags;
  CLI::App* cmd_audit = app.add_subcommand(
      "audit", "Estimate the privacy leakage of a sampler");
  cmd_audit->add_option("--input", audit_flags.input_path,
                        "File of samples, one real per line");
  cmd_audit->add_option("--mechanism", audit_flags.mechanism,
                        "Built-in mechanism to audit")
      ->check(CLI::IsMember({"palpha", "gaussian"}));
  cmd_audit
      ->add_option("--sensitivity", audit_flags.common.sensitivity,
                   "Query sensitivity")
      ->required();
  cmd_audit->add_option("--delta", audit_flags.common.delta,
                        "Privacy parameter (built-in mechanisms)");
  cmd_audit->add_option("--alpha", audit_flags.alpha, "Origin mass (palpha)");
  CLI::Option* sigma_opt =
      cmd_audit->add_option("--sigma", audit_flags.sigma, "Sigma (gaussian)");
  cmd_audit->add_flag("--analytic", audit_flags.analytic,
                      "Use the closed-form audit instead of sampling");
  cmd_audit->add_option("--count", audit_flags.count,
                        "Number of draws for built-in mechanisms");
  cmd_audit->add_option("--seed", audit_flags.seed, "RNG seed");
  cmd_audit->add_option("--bins", audit_flags.bins, "Histogram bins");
  cmd_audit->add_option("--shifts", audit_flags.shifts, "Shift grid points");
  cmd_audit->add_option("--histogram-out", audit_flags.histogram_out,
                        "Also write the audited histogram as CSV");
  add_format_flag(cmd_audit, &audit_flags.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  sample_flags.alpha_set = alpha_opt->count() > 0;
  audit_flags.sigma_set = sigma_opt->count() > 0;

  try {
    if (cmd_optimal->parsed()) {
      return run_optimal(optimal_flags);
    }
    if (cmd_compare->parsed()) {
      return run_compare(compare_flags);
    }
    if (cmd_sample->parsed()) {
      return run_sample(sample_flags);
    }
    if (cmd_curve->parsed()) {
      return run_curve(curve_flags);
    }
    if (cmd_audit->parsed()) {
      return run_audit(audit_flags);
    }
  } catch (const optnoise::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const optnoise::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const optnoise::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
