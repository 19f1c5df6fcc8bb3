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

#ifndef OPTNOISE_COST_H_
#define OPTNOISE_COST_H_

#include <functional>

namespace optnoise {

// A cost charged to a noise value x. Admissible costs are symmetric in x,
// nondecreasing in |x|, and nonnegative: either the moment family |x|^n
// (n >= 1) or an arbitrary caller-supplied function with those properties.
//
// Immutable after construction and safe to share across threads.
class CostSpec {
 public:
  // |x|^n moment cost. DomainError if n < 1.
  static CostSpec ln_moment(double n);

  // Caller-supplied cost. Symmetry, monotonicity in |x|, and nonnegativity
  // are spot-checked on a 64-point grid over [-check_half_width,
  // check_half_width]; a violation there is a DomainError. The same check
  // runs again over the actual support whenever the cost is integrated
  // against a distribution.
  static CostSpec generic(std::function<double(double)> eval,
                          double check_half_width = 1.0);

  double operator()(double x) const;

  bool is_ln_moment() const { return is_ln_moment_; }

  // Exponent of an ln_moment cost; DomainError for generic costs.
  double ln_exponent() const;

  // Spot-checks the admissibility properties on a 64-point symmetric grid
  // over [-half_width, half_width]. Throws DomainError on violation.
  void validate_on(double half_width) const;

 private:
  CostSpec(bool is_ln, double n, std::function<double(double)> eval)
      : is_ln_moment_(is_ln), n_(n), eval_(std::move(eval)) {}

  bool is_ln_moment_;
  double n_;
  std::function<double(double)> eval_;
};

}  // namespace optnoise

#endif  // OPTNOISE_COST_H_
