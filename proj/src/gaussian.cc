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

#include "optnoise/gaussian.h"

#include <cmath>
#include <numbers>

#include "optnoise/errors.h"

namespace optnoise {

GaussianBaseline calibrate_gaussian(double delta, double sensitivity) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta", "delta must lie in (0,1)");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity", "sensitivity must be positive");
  }
  return GaussianBaseline{sensitivity / (2.0 * delta), sensitivity, delta};
}

double gaussian_cost(const GaussianBaseline& g, double n,
                     CostConvention convention) {
  if (!(g.sigma > 0.0)) {
    throw DomainError("sigma", "sigma must be positive");
  }
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n", "moment cost exponent must satisfy n >= 1");
  }
  if (convention == CostConvention::kSigmaPower) {
    return std::pow(g.sigma, n);
  }
  if (n == 1.0) {
    return g.sigma * std::sqrt(2.0 / std::numbers::pi);
  }
  const bool even_integer = n == std::floor(n) && std::fmod(n, 2.0) == 0.0;
  if (!even_integer) {
    throw DomainError(
        "n", "exact Gaussian moments are defined for n = 1, n = 2, and even "
             "integer n");
  }
  // E|X|^n = sigma^n * (n-1)!! for even n.
  double double_factorial = 1.0;
  for (double k = n - 1.0; k > 1.0; k -= 2.0) {
    double_factorial *= k;
  }
  return std::pow(g.sigma, n) * double_factorial;
}

double sample_gaussian(double sigma, RandomStream& rng) {
  return sigma * rng.normal();
}

}  // namespace optnoise
