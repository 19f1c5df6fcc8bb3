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

#include "optnoise/cost.h"

#include <cmath>

#include "optnoise/errors.h"

namespace optnoise {
namespace {

constexpr int kCheckPoints = 64;  // 32 magnitudes, mirrored
constexpr double kCheckSlack = 1e-9;

}  // namespace

CostSpec CostSpec::ln_moment(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n", "moment cost exponent must satisfy n >= 1");
  }
  return CostSpec(true, n, nullptr);
}

CostSpec CostSpec::generic(std::function<double(double)> eval,
                           double check_half_width) {
  if (!eval) {
    throw DomainError("eval", "generic cost function must be callable");
  }
  if (!(check_half_width > 0.0)) {
    throw DomainError("check_half_width",
                      "validation grid half-width must be positive");
  }
  CostSpec spec(false, 0.0, std::move(eval));
  spec.validate_on(check_half_width);
  return spec;
}

double CostSpec::operator()(double x) const {
  if (is_ln_moment_) {
    return std::pow(std::abs(x), n_);
  }
  return eval_(x);
}

double CostSpec::ln_exponent() const {
  if (!is_ln_moment_) {
    throw DomainError("cost", "cost is not an |x|^n moment");
  }
  return n_;
}

void CostSpec::validate_on(double half_width) const {
  if (is_ln_moment_) {
    return;  // |x|^n is admissible by construction
  }
  if (!(half_width > 0.0)) {
    throw DomainError("half_width",
                      "validation grid half-width must be positive");
  }

  const double at_origin = eval_(0.0);
  if (!std::isfinite(at_origin) || at_origin < 0.0) {
    throw DomainError("cost", "cost must be finite and nonnegative at 0");
  }

  double previous = at_origin;
  for (int i = 1; i <= kCheckPoints / 2; ++i) {
    const double x = half_width * static_cast<double>(i) / (kCheckPoints / 2);
    const double pos = eval_(x);
    const double neg = eval_(-x);
    const double scale = std::fmax(1.0, std::abs(pos));
    if (!std::isfinite(pos) || !std::isfinite(neg) || pos < 0.0 || neg < 0.0) {
      throw DomainError("cost", "cost must be finite and nonnegative");
    }
    if (std::abs(pos - neg) > kCheckSlack * scale) {
      throw DomainError("cost", "cost must be symmetric: eval(x) == eval(-x)");
    }
    if (pos < previous - kCheckSlack * scale) {
      throw DomainError("cost",
                        "cost must be nondecreasing in |x| on [0, inf)");
    }
    previous = pos;
  }
}

}  // namespace optnoise
