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

#ifndef OPTNOISE_CURVE_H_
#define OPTNOISE_CURVE_H_

#include <iosfwd>
#include <vector>

#include "optnoise/gaussian.h"

namespace optnoise {

struct CurveRow {
  double delta;
  double optimal_cost;
  double gaussian_cost;
  double ratio;  // optimal_cost / gaussian_cost
};

// Per-delta comparison of the optimal mechanism against the calibrated
// Gaussian baseline for the |x|^n cost. Rows are strictly increasing in
// delta.
struct CurveTable {
  std::vector<CurveRow> rows;
  double n = 1.0;
  double sensitivity = 1.0;
};

// Optimal-vs-Gaussian costs at a single delta.
CurveRow compare_costs(double delta, double sensitivity, double n,
                       CostConvention convention = CostConvention::kSigmaPower);

// Evaluates one row per delta in {delta_min, delta_min + step, ...} up to
// delta_max. Requires 0 < delta_min < delta_max < 1 and step > 0.
CurveTable build_curve(double n, double sensitivity, double delta_min,
                       double delta_max, double step,
                       CostConvention convention = CostConvention::kSigmaPower);

// CSV with header `delta,optimal_cost,gaussian_cost,ratio`, 12 significant
// digits per value.
void write_curve_csv(std::ostream& out, const CurveTable& table);
std::vector<CurveRow> read_curve_rows(std::istream& in);

}  // namespace optnoise

#endif  // OPTNOISE_CURVE_H_
