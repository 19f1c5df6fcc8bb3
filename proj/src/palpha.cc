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

#include "optnoise/palpha.h"

#include <algorithm>
#include <cmath>

#include "optnoise/errors.h"

namespace optnoise {

PAlphaDist::PAlphaDist(double delta, double sensitivity, double alpha)
    : delta_(delta), sensitivity_(sensitivity), alpha_(alpha) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta", "delta must lie in (0,1)");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity", "sensitivity must be positive");
  }
  if (!(alpha >= 0.0 && alpha < delta)) {
    throw DomainError("alpha", "alpha must lie in [0, delta)");
  }
  // Cached so pdf/cdf evaluation is division-free.
  half_width_ = (1.0 - alpha_) / (delta_ - alpha_) * (sensitivity_ / 2.0);
  density_ = (delta_ - alpha_) / sensitivity_;
}

double PAlphaDist::pdf(double x) const {
  return (x >= -half_width_ && x <= half_width_) ? density_ : 0.0;
}

double PAlphaDist::cdf(double x) const {
  if (x < -half_width_) {
    return 0.0;
  }
  if (x >= half_width_) {
    return 1.0;
  }
  double mass = density_ * (x + half_width_);
  if (x >= 0.0) {
    mass += alpha_;
  }
  return std::clamp(mass, 0.0, 1.0);
}

double PAlphaDist::interval_prob(double a, double b) const {
  if (a > b) {
    throw DomainError("interval", "interval bounds must satisfy a <= b");
  }
  const double overlap =
      std::fmax(0.0, std::fmin(b, half_width_) - std::fmax(a, -half_width_));
  double mass = density_ * overlap;
  if (a <= 0.0 && 0.0 <= b) {
    mass += alpha_;
  }
  return std::clamp(mass, 0.0, 1.0);
}

PAlphaDist::Draw PAlphaDist::sample_draw(RandomStream& rng) const {
  const bool atom = rng.uniform01() < alpha_;
  const double uniform = half_width_ * rng.uniform_sym();
  return Draw{atom ? 0.0 : uniform, atom};
}

double expected_cost_ln(const PAlphaDist& d, double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n", "moment cost exponent must satisfy n >= 1");
  }
  const double one_minus_alpha = 1.0 - d.alpha();
  const double gap = d.delta() - d.alpha();
  return std::pow(d.sensitivity(), n) / ((n + 1.0) * std::pow(2.0, n)) *
         std::pow(one_minus_alpha, n + 1.0) / std::pow(gap, n);
}

double expected_cost_generic(const PAlphaDist& d, const CostSpec& cost,
                             double quad_tol) {
  if (!(quad_tol > 0.0)) {
    throw DomainError("quad_tol", "quadrature tolerance must be positive");
  }
  cost.validate_on(d.half_width());
  // Keep both the integral error and its contribution to the total under
  // quad_tol, whichever is stricter.
  const double tol = quad_tol / std::fmax(1.0, 2.0 * d.density());
  const double integral = integrate([&cost](double x) { return cost(x); }, 0.0,
                                    d.half_width(), tol);
  return d.alpha() * cost(0.0) + 2.0 * d.density() * integral;
}

}  // namespace optnoise
