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

// End-to-end acceptance suite. Each test verifies one release criterion and
// prints a single PASS/FAIL line, so the suite output doubles as a checklist.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "optnoise/audit.h"
#include "optnoise/curve.h"
#include "optnoise/gaussian.h"
#include "optnoise/optimal.h"
#include "optnoise/palpha.h"
#include "optnoise/random.h"
#include "oracles.h"
#include "subprocess.h"

namespace optnoise {
namespace {

using nlohmann::json;
using optnoise_test::run_cli;

// Prints the PASS/FAIL line for one criterion and enforces its time budget.
class CriterionGuard {
 public:
  CriterionGuard(int index, std::string label, double seconds_budget)
      : index_(index),
        label_(std::move(label)),
        seconds_budget_(seconds_budget),
        start_(std::chrono::steady_clock::now()) {}

  ~CriterionGuard() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    EXPECT_LE(elapsed, seconds_budget_) << "criterion " << index_;
    const bool failed = testing::Test::HasFailure();
    std::printf("[criterion %d] %-52s %s  (%.2fs)\n", index_, label_.c_str(),
                failed ? "FAIL" : "PASS", elapsed);
    std::fflush(stdout);
  }

 private:
  int index_;
  std::string label_;
  double seconds_budget_;
  std::chrono::steady_clock::time_point start_;
};

const double kTableDeltas[] = {0.1, 0.25, 0.5, 0.75, 0.9};

TEST(Acceptance, Criterion1MagnitudeComparisonClosedForms) {
  CriterionGuard guard(1, "closed-form magnitude comparison (n=1)", 1.0);
  for (const double delta : kTableDeltas) {
    // References written with plain arithmetic, independent of the library's
    // pow-based evaluation.
    const double ref_gaussian = 1.0 / (2.0 * delta);
    const double ref_optimal =
        delta <= 0.5 ? 1.0 / (4.0 * delta) : 1.0 - delta;

    const CurveRow row = compare_costs(delta, 1.0, 1.0);
    EXPECT_NEAR(row.gaussian_cost, ref_gaussian, 1e-12) << "delta=" << delta;
    EXPECT_NEAR(row.optimal_cost, ref_optimal, 1e-12) << "delta=" << delta;

    // The compare command reports the same values at 12 significant digits.
    const optnoise_test::CommandResult r = run_cli(
        "compare --delta " + std::to_string(delta) + " --sensitivity 1 --n 1");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const json record = json::parse(r.output);
    EXPECT_NEAR(record["gaussian_cost"].get<double>(), ref_gaussian,
                1e-11 * std::fmax(1.0, ref_gaussian));
    EXPECT_NEAR(record["optimal_cost"].get<double>(), ref_optimal,
                1e-11 * std::fmax(1.0, ref_optimal));
  }
}

TEST(Acceptance, Criterion2PowerComparisonClosedForms) {
  CriterionGuard guard(2, "closed-form power comparison (n=2)", 1.0);
  for (const double delta : kTableDeltas) {
    const double ref_gaussian = 1.0 / (4.0 * delta * delta);
    const double ref_optimal = delta <= 2.0 / 3.0
                                   ? 1.0 / (12.0 * delta * delta)
                                   : 9.0 / 16.0 * (1.0 - delta);

    const CurveRow row = compare_costs(delta, 1.0, 2.0);
    EXPECT_NEAR(row.gaussian_cost, ref_gaussian,
                1e-12 * std::fmax(1.0, ref_gaussian))
        << "delta=" << delta;
    EXPECT_NEAR(row.optimal_cost, ref_optimal,
                1e-12 * std::fmax(1.0, ref_optimal))
        << "delta=" << delta;

    const optnoise_test::CommandResult r = run_cli(
        "compare --delta " + std::to_string(delta) + " --sensitivity 1 --n 2");
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const json record = json::parse(r.output);
    EXPECT_NEAR(record["gaussian_cost"].get<double>(), ref_gaussian,
                1e-11 * std::fmax(1.0, ref_gaussian));
    EXPECT_NEAR(record["optimal_cost"].get<double>(), ref_optimal,
                1e-11 * std::fmax(1.0, ref_optimal));
  }
}

TEST(Acceptance, Criterion3RatioClaims) {
  CriterionGuard guard(3, "high-privacy ratios and low-privacy decay", 1.0);
  // Exactly 1/2 for all delta <= 1/2 under the magnitude cost.
  for (double delta = 0.01; delta <= 0.5 + 1e-15; delta += 0.01) {
    EXPECT_NEAR(compare_costs(delta, 1.0, 1.0).ratio, 0.5, 1e-12)
        << "delta=" << delta;
  }
  // Exactly 1/3 for all delta <= 2/3 under the power cost.
  for (double delta = 0.01; delta <= 2.0 / 3.0; delta += 0.01) {
    EXPECT_NEAR(compare_costs(delta, 1.0, 2.0).ratio, 1.0 / 3.0, 1e-12)
        << "delta=" << delta;
  }
  // The ratio vanishes proportionally to (1 - delta): ratio/(1-delta) at
  // delta = 0.99 is within 5% of its value at delta = 0.999.
  for (const double n : {1.0, 2.0}) {
    const double near_one = compare_costs(0.99, 1.0, n).ratio / 0.01;
    const double nearer_one = compare_costs(0.999, 1.0, n).ratio / 0.001;
    EXPECT_NEAR(near_one / nearer_one, 1.0, 0.05) << "n=" << n;
  }
}

TEST(Acceptance, Criterion4ConcentrationOnset) {
  CriterionGuard guard(4, "concentration onset and cost continuity", 1.0);
  for (const double n : {1.0, 2.0, 3.0}) {
    const double onset = n / (n + 1.0);
    // alpha* switches from zero to positive exactly at the onset.
    EXPECT_EQ(optimal_alpha_ln(onset, n), 0.0) << "n=" << n;
    EXPECT_EQ(optimal_alpha_ln(std::nextafter(onset, 0.0), n), 0.0)
        << "n=" << n;
    EXPECT_GT(optimal_alpha_ln(std::nextafter(onset, 1.0), n), 0.0)
        << "n=" << n;
    EXPECT_GT(optimal_alpha_ln(onset + 1e-9, n), 0.0) << "n=" << n;

    for (const double sensitivity : {1.0, 3.0}) {
      const double below = min_cost_ln(onset - 1e-9, sensitivity, n);
      const double above = min_cost_ln(onset + 1e-9, sensitivity, n);
      EXPECT_LE(std::abs(below - above), 1e-6 * std::pow(sensitivity, n))
          << "n=" << n << " sensitivity=" << sensitivity;
    }
  }
}

TEST(Acceptance, Criterion5NumericOptimizerMatchesClosedForms) {
  CriterionGuard guard(5, "numeric optimizer matches closed forms", 30.0);
  for (const double n : {1.0, 1.5, 2.0, 3.0}) {
    const CostSpec cost = CostSpec::ln_moment(n);
    for (const double delta : {0.1, 0.3, n / (n + 1.0), 0.8, 0.95}) {
      const double alpha_ref = optimal_alpha_ln(delta, n);
      const double cost_ref = min_cost_ln(delta, 1.0, n);
      const OptimalResult numeric = optimal_alpha_generic(
          delta, 1.0, cost, /*grid_points=*/256, /*refine_tol=*/1e-8,
          /*quad_tol=*/1e-10);
      EXPECT_NEAR(numeric.alpha_star, alpha_ref, 1e-5)
          << "n=" << n << " delta=" << delta;
      EXPECT_NEAR(numeric.min_cost / cost_ref, 1.0, 1e-7)
          << "n=" << n << " delta=" << delta;
    }
  }
}

TEST(Acceptance, Criterion6SamplerFidelity) {
  CriterionGuard guard(6, "sampler fidelity at delta=0.8, alpha=0.4", 10.0);
  const PAlphaDist d(0.8, 1.0, 0.4);  // alpha* for n=2 at delta = 0.8
  RandomStream rng(20260806);
  const int kDraws = 1000000;

  std::vector<double> samples(kDraws);
  long atom_draws = 0;
  double sum_sq = 0.0;
  for (double& x : samples) {
    const PAlphaDist::Draw draw = d.sample_draw(rng);
    x = draw.value;
    atom_draws += draw.atom;
    sum_sq += draw.value * draw.value;
  }

  // Exact-zero fraction: 0.4 +- 0.0015 (3 sigma at 10^6 draws).
  EXPECT_NEAR(static_cast<double>(atom_draws) / kDraws, 0.4, 0.0015);

  // E[X^2] = 0.1125 +- 3 * sqrt((E[X^4] - E[X^2]^2) / N), from the analytic
  // moments E[X^4] = 2 * density * W^5 / 5.
  const double w = d.half_width();
  const double m2 = 2.0 * d.density() * w * w * w / 3.0;
  const double m4 = 2.0 * d.density() * w * w * w * w * w / 5.0;
  const double stderr3 = 3.0 * std::sqrt((m4 - m2 * m2) / kDraws);
  EXPECT_NEAR(sum_sq / kDraws, 0.1125, stderr3);

  // Empirical CDF within 0.002 of the analytic CDF on a 1000-point grid.
  std::sort(samples.begin(), samples.end());
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = -1.1 * w + 2.2 * w * static_cast<double>(i) / 999.0;
    worst = std::fmax(worst,
                      std::abs(optnoise_test::ecdf(samples, x) - d.cdf(x)));
  }
  EXPECT_LE(worst, 0.002);
}

TEST(Acceptance, Criterion7AuditTightness) {
  CriterionGuard guard(7, "empirical audit tightness; calibrated Gaussian",
                       60.0);
  RandomStream param_rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    const double delta = 0.1 + 0.8 * param_rng.uniform01();
    const double sensitivity = 0.5 + 1.5 * param_rng.uniform01();
    const double alpha = 0.9 * delta * param_rng.uniform01();
    const PAlphaDist d(delta, sensitivity, alpha);

    RandomStream rng(1000 + static_cast<std::uint64_t>(trial));
    std::vector<double> samples(1000000);
    for (double& x : samples) {
      x = d.sample(rng);
    }
    const AuditReport report =
        empirical_delta(samples, sensitivity, /*bins=*/500, /*shift_grid=*/64);
    EXPECT_NEAR(report.delta_hat, delta, 0.02)
        << "trial=" << trial << " delta=" << delta << " alpha=" << alpha
        << " sensitivity=" << sensitivity;
    EXPECT_NEAR(report.worst_shift, sensitivity, sensitivity / 64 + 1e-12)
        << "trial=" << trial;
  }

  // The sigma = sensitivity/(2 delta) Gaussian stays within budget across a
  // 99-point delta grid.
  for (int i = 1; i <= 99; ++i) {
    const double delta = 0.01 * i;
    const GaussianBaseline g = calibrate_gaussian(delta, 1.7);
    EXPECT_LE(analytic_delta_gaussian(g.sigma, g.sensitivity).delta_hat, delta)
        << "delta=" << delta;
  }
}

TEST(Acceptance, Criterion8SymmetrizationNeverIncreasesLeakage) {
  CriterionGuard guard(8, "symmetrization never increases leakage", 10.0);
  RandomStream rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    Histogram h;
    const int bins = 101 + 2 * static_cast<int>(rng.uniform01() * 150);
    h.hi = 1.0 + 4.0 * rng.uniform01();
    h.lo = -h.hi;
    h.bin_width = (h.hi - h.lo) / bins;
    h.masses.resize(bins);
    h.atom_at_zero = 0.3 * rng.uniform01();
    double total = 0.0;
    for (double& m : h.masses) {
      m = rng.uniform01() < 0.25 ? rng.uniform01() : 0.0;
      total += m;
    }
    if (total == 0.0) {
      h.masses[bins / 4] = total = 1.0;
    }
    for (double& m : h.masses) {
      m *= (1.0 - h.atom_at_zero) / total;
    }

    const Histogram s = symmetrize(h);
    for (int j = 1; j <= 32; ++j) {
      const double d = h.hi * static_cast<double>(j) / 32.0;
      EXPECT_LE(shift_delta(s, d), shift_delta(h, d) + 1e-12)
          << "trial=" << trial << " d=" << d;
    }
  }
}

}  // namespace
}  // namespace optnoise
