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

#ifndef OPTNOISE_AUDIT_H_
#define OPTNOISE_AUDIT_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "optnoise/palpha.h"

namespace optnoise {

// Uniform-bin probability histogram over [lo, hi], with the origin point
// mass tracked separately from the binned continuous mass. Bin i covers
// [lo + i * bin_width, lo + (i+1) * bin_width). masses plus atom_at_zero sum
// to one (within 1e-9) for a histogram holding a full distribution.
struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  double bin_width = 0.0;
  std::vector<double> masses;
  double atom_at_zero = 0.0;

  int bin_count() const { return static_cast<int>(masses.size()); }

  // Index of the bin whose half-open range contains x; clamped to the edge
  // bins so hi itself lands in the last bin.
  int bin_index(double x) const;

  double total_mass() const;
};

// Bins samples over [-range, range]. Exact zeros are counted as the origin
// atom; everything else lands in its bin (values outside the range are
// clamped to the edge bins).
Histogram histogram_from_samples(std::span<const double> samples, double range,
                                 int bins);

enum class AuditMethod {
  kAnalyticPAlpha,
  kAnalyticGaussian,
  kEmpiricalHistogram,
};

// Result of a privacy audit. delta_hat is the largest one-sided distance
// P(S) - P(S + d) found over shifts |d| <= sensitivity and the sets S the
// method can see. Analytic methods are exact for their family and report
// sample_count = 0; the histogram method searches only histogram-measurable
// sets on a finite shift grid, so it reports a lower bound on the true sup.
struct AuditReport {
  double delta_hat = 0.0;
  double worst_shift = 0.0;
  AuditMethod method = AuditMethod::kEmpiricalHistogram;
  std::size_t sample_count = 0;
};

// For the uniform-with-atom family the worst case is exact: delta_hat equals
// the probability of [-sensitivity/2, sensitivity/2], attained at the full
// shift d = sensitivity.
AuditReport analytic_delta_palpha(const PAlphaDist& d);

// Exact leakage of Normal(0, sigma^2) noise under shifts up to sensitivity:
// delta_hat = 2 * Phi(sensitivity / (2 sigma)) - 1.
AuditReport analytic_delta_gaussian(double sigma, double sensitivity);

// The histogram the empirical audit works on: `bins` bins over
// [-(max|x| + sensitivity), +(max|x| + sensitivity)].
Histogram audit_histogram(std::span<const double> samples, double sensitivity,
                          int bins);

// Builds the audit histogram of the samples and maximizes the one-sided
// shift distance over a uniform grid of shift_grid shifts in
// (0, sensitivity]. Requires a nonempty sample list, bins >= 100, and
// shift_grid >= 10.
AuditReport empirical_delta(std::span<const double> samples,
                            double sensitivity, int bins = 2000,
                            int shift_grid = 64);

// One-sided histogram shift distance at a single shift d:
//   sum_i max(0, q_i - q_{i+k}),   k = round(d / bin_width),
// where q is the binned mass with the origin atom deposited into the bin
// containing zero, and bins outside the range count as empty.
double shift_delta(const Histogram& h, double d);

// Averages each bin with its mirror image: output mass(i) =
// (mass(i) + mass(B-1-i)) / 2, atom unchanged. Requires lo == -hi.
Histogram symmetrize(const Histogram& h);

// True iff d's privacy leakage is within target_delta (plus 1e-12 rounding
// headroom), i.e. the probability of [-sensitivity/2, sensitivity/2] does
// not exceed the target.
bool check_dp(const PAlphaDist& d, double target_delta);

// Standard normal CDF, computed from the complementary error function;
// absolute error well below 1e-12.
double normal_cdf(double x);

// CSV with header `bin_lo,bin_hi,mass`, one row per bin, and a final
// `atom,0,mass` row.
void write_histogram_csv(std::ostream& out, const Histogram& h);
Histogram read_histogram_csv(std::istream& in);

// One real per line; blank lines are skipped. ParseError (with the 1-based
// line number) on anything else.
std::vector<double> parse_samples(std::istream& in);

}  // namespace optnoise

#endif  // OPTNOISE_AUDIT_H_
