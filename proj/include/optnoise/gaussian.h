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

#ifndef OPTNOISE_GAUSSIAN_H_
#define OPTNOISE_GAUSSIAN_H_

#include "optnoise/random.h"

namespace optnoise {

// Gaussian (0, delta)-DP baseline: zero-mean normal noise calibrated with
// sigma = sensitivity / (2 * delta). Immutable.
struct GaussianBaseline {
  double sigma;
  double sensitivity;
  double delta;
};

// Builds the baseline with sigma = sensitivity / (2 * delta).
// DomainError unless 0 < delta < 1 and sensitivity > 0.
GaussianBaseline calibrate_gaussian(double delta, double sensitivity);

// How the "|x|^n cost" of a Gaussian is reported.
//   kSigmaPower:   sigma^n — the usual comparison convention, where sigma
//                  stands in for the noise magnitude and sigma^2 for power.
//   kExactMoment:  E|X|^n for X ~ Normal(0, sigma^2); defined for n = 1
//                  (sigma * sqrt(2/pi)), n = 2 (sigma^2), and even integer n
//                  (sigma^n * (n-1)!!). Other n raise DomainError.
enum class CostConvention { kSigmaPower, kExactMoment };

double gaussian_cost(const GaussianBaseline& g, double n,
                     CostConvention convention = CostConvention::kSigmaPower);

// One Normal(0, sigma^2) draw via the stream's Box-Muller transform;
// deterministic given seed and stream position.
double sample_gaussian(double sigma, RandomStream& rng);

inline double sample_gaussian(const GaussianBaseline& g, RandomStream& rng) {
  return sample_gaussian(g.sigma, rng);
}

}  // namespace optnoise

#endif  // OPTNOISE_GAUSSIAN_H_
