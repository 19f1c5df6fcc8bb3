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

#ifndef OPTNOISE_OPTIMAL_H_
#define OPTNOISE_OPTIMAL_H_

#include <functional>

#include "optnoise/cost.h"
#include "optnoise/palpha.h"
#include "optnoise/quadrature.h"

namespace optnoise {

enum class OptimizeMethod { kClosedForm, kNumericScan };

// The cost-minimizing member of the uniform-with-atom family.
struct OptimalResult {
  double alpha_star;   // optimal origin mass, in [0, delta)
  double min_cost;     // expected cost of `dist` under the optimized cost
  PAlphaDist dist;     // the optimal distribution
  OptimizeMethod method;
};

// Optimal origin mass for the |x|^n cost:
//   0                      for delta in (0, n/(n+1)]
//   (n+1) * delta - n      for delta in (n/(n+1), 1)
// The onset delta = n/(n+1) belongs to the alpha* = 0 branch.
double optimal_alpha_ln(double delta, double n);

// Minimum expected |x|^n cost over the family; continuous across the onset:
//   sensitivity^n / (2^n (n+1) delta^n)            for delta <= n/(n+1)
//   ((n+1)/(2n))^n * (1 - delta) * sensitivity^n   otherwise
double min_cost_ln(double delta, double sensitivity, double n);

// Closed-form optimum for the |x|^n cost, bundled with its distribution.
OptimalResult optimal_ln(double delta, double sensitivity, double n);

// Numeric optimum for an arbitrary admissible cost: scans alpha over a
// uniform grid on [0, delta * (1 - 1e-9)], then refines around the best grid
// point by golden-section search until the bracket width drops below
// refine_tol. Cost ties resolve to the smallest alpha. The scan does not
// assume the cost-in-alpha map is unimodal; only the local refinement does.
// Requires grid_points >= 16 and refine_tol > 0; propagates QuadratureError
// from the per-point cost integrals.
OptimalResult optimal_alpha_generic(double delta, double sensitivity,
                                    const CostSpec& cost, int grid_points = 256,
                                    double refine_tol = 1e-8,
                                    double quad_tol = kDefaultQuadTol);

// Golden-section search for a local minimum of f on [a, b]: shrinks the
// bracket until its width is at most tol and returns the midpoint.
double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol);

}  // namespace optnoise

#endif  // OPTNOISE_OPTIMAL_H_
