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

#ifndef OPTNOISE_PALPHA_H_
#define OPTNOISE_PALPHA_H_

#include "optnoise/cost.h"
#include "optnoise/quadrature.h"
#include "optnoise/random.h"

namespace optnoise {

// Additive noise law for (0, delta)-differentially-private release of a
// real-valued query with sensitivity `sensitivity`: a probability mass
// `alpha` at the origin plus a uniform density on the symmetric interval
// [-half_width, half_width], where
//
//   half_width = ((1 - alpha) / (delta - alpha)) * sensitivity / 2
//   density    = (delta - alpha) / sensitivity
//
// The construction places probability exactly delta on the closed interval
// [-sensitivity/2, sensitivity/2], which is the tight privacy budget for a
// symmetric unimodal noise distribution. The origin atom is the only point
// mass. Instances are immutable and safe to share across threads.
class PAlphaDist {
 public:
  // Requires 0 < delta < 1, sensitivity > 0, and 0 <= alpha < delta;
  // otherwise throws DomainError naming the offending field.
  PAlphaDist(double delta, double sensitivity, double alpha);

  double delta() const { return delta_; }
  double sensitivity() const { return sensitivity_; }
  double alpha() const { return alpha_; }
  double half_width() const { return half_width_; }
  double density() const { return density_; }

  // Density of the continuous part; the atom is not represented here.
  double pdf(double x) const;

  // Right-continuous CDF with a jump of size alpha at x = 0.
  // cdf(-half_width) == 0 and cdf(half_width) == 1.
  double cdf(double x) const;

  // Probability of the closed interval [a, b]; includes the origin atom iff
  // a <= 0 <= b. DomainError if a > b.
  double interval_prob(double a, double b) const;

  // One noise draw together with its branch: `atom` is true iff the draw
  // came from the origin mass. Atom draws are identified by the Bernoulli
  // branch, never by comparing the value against zero.
  struct Draw {
    double value;
    bool atom;
  };

  // Draws Bernoulli B with Pr[B = 0] = alpha and U uniform on
  // [-half_width, half_width], and returns B * U. Always consumes exactly
  // two uniforms, so a draw's position in the stream determines its value.
  Draw sample_draw(RandomStream& rng) const;

  double sample(RandomStream& rng) const { return sample_draw(rng).value; }

 private:
  double delta_;
  double sensitivity_;
  double alpha_;
  double half_width_;
  double density_;
};

// Expected |x|^n cost under d, in closed form:
//   sensitivity^n / ((n+1) 2^n) * (1-alpha)^(n+1) / (delta-alpha)^n.
// DomainError if n < 1.
double expected_cost_ln(const PAlphaDist& d, double n);

// Expected cost under d for an arbitrary admissible cost:
//   alpha * cost(0) + 2 * density * integral of cost over [0, half_width],
// with the integral evaluated by adaptive quadrature to absolute error at
// most quad_tol. Re-validates generic costs over the actual support.
// Throws QuadratureError if the tolerance is unreachable.
double expected_cost_generic(const PAlphaDist& d, const CostSpec& cost,
                             double quad_tol = kDefaultQuadTol);

}  // namespace optnoise

#endif  // OPTNOISE_PALPHA_H_
