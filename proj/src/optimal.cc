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

#include "optnoise/optimal.h"

#include <cmath>
#include <vector>

#include "optnoise/errors.h"

namespace optnoise {
namespace {

void check_common(double delta, double n) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta", "delta must lie in (0,1)");
  }
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n", "moment cost exponent must satisfy n >= 1");
  }
}

// The scan stops just short of delta: the support (and any nondecreasing
// cost) diverges as alpha approaches delta, so the infimum is never there.
constexpr double kAlphaCapFraction = 1.0 - 1e-9;

// Costs within this relative distance count as equal in the scan, so the
// smallest-alpha tie-break is stable under last-ulp rounding noise (e.g. for
// a constant cost). Real cost differences across grid steps sit far above
// this level.
constexpr double kCostTieRel = 0x1.0p-48;

bool tied(double a, double b) {
  return std::abs(a - b) <= kCostTieRel * std::fmax(std::abs(a), std::abs(b));
}

}  // namespace

double optimal_alpha_ln(double delta, double n) {
  check_common(delta, n);
  const double onset = n / (n + 1.0);
  if (delta <= onset) {
    return 0.0;
  }
  // Single-rounded so the first representable delta above the onset already
  // yields a positive mass.
  return std::fmax(0.0, std::fma(n + 1.0, delta, -n));
}

double min_cost_ln(double delta, double sensitivity, double n) {
  check_common(delta, n);
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity", "sensitivity must be positive");
  }
  const double onset = n / (n + 1.0);
  if (delta <= onset) {
    return std::pow(sensitivity, n) /
           (std::pow(2.0, n) * (n + 1.0) * std::pow(delta, n));
  }
  return std::pow((n + 1.0) / (2.0 * n), n) * (1.0 - delta) *
         std::pow(sensitivity, n);
}

OptimalResult optimal_ln(double delta, double sensitivity, double n) {
  const double alpha = optimal_alpha_ln(delta, n);
  return OptimalResult{alpha, min_cost_ln(delta, sensitivity, n),
                       PAlphaDist(delta, sensitivity, alpha),
                       OptimizeMethod::kClosedForm};
}

OptimalResult optimal_alpha_generic(double delta, double sensitivity,
                                    const CostSpec& cost, int grid_points,
                                    double refine_tol, double quad_tol) {
  if (grid_points < 16) {
    throw DomainError("grid_points", "grid must have at least 16 points");
  }
  if (!(refine_tol > 0.0)) {
    throw DomainError("refine_tol", "refinement tolerance must be positive");
  }

  const double alpha_cap = delta * kAlphaCapFraction;
  const auto cost_at = [&](double alpha) {
    return expected_cost_generic(PAlphaDist(delta, sensitivity, alpha), cost,
                                 quad_tol);
  };

  std::vector<double> grid(grid_points);
  double best_alpha = 0.0;
  double best_cost = 0.0;
  int best_index = 0;
  for (int i = 0; i < grid_points; ++i) {
    grid[i] = alpha_cap * static_cast<double>(i) / (grid_points - 1);
    const double c = cost_at(grid[i]);
    // Scanning upward keeps the smallest alpha among tied minima.
    if (i == 0 || (c < best_cost && !tied(c, best_cost))) {
      best_cost = c;
      best_alpha = grid[i];
      best_index = i;
    }
  }

  const double lo = grid[best_index > 0 ? best_index - 1 : 0];
  const double hi =
      grid[best_index < grid_points - 1 ? best_index + 1 : grid_points - 1];
  if (hi - lo > refine_tol) {
    const double refined = golden_section_min(cost_at, lo, hi, refine_tol);
    const double refined_cost = cost_at(refined);
    // A refinement that merely ties the grid optimum only wins with a
    // smaller alpha.
    const bool better =
        refined_cost < best_cost && !tied(refined_cost, best_cost);
    if (better || (tied(refined_cost, best_cost) && refined < best_alpha)) {
      best_cost = refined_cost;
      best_alpha = refined;
    }
  }

  return OptimalResult{best_alpha, best_cost,
                       PAlphaDist(delta, sensitivity, best_alpha),
                       OptimizeMethod::kNumericScan};
}

double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("tol", "tolerance must be positive");
  }
  if (a > b) {
    std::swap(a, b);
  }
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace optnoise
