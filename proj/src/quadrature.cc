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

#include "optnoise/quadrature.h"

#include <cmath>

#include "optnoise/errors.h"

namespace optnoise {
namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  std::size_t remaining;
};

double simpson(double fa, double fm, double fb, double width) {
  return width / 6.0 * (fa + 4.0 * fm + fb);
}

// Absolute tolerances below a few ulps of the running value are not
// attainable in double arithmetic; panels whose estimated error is under
// this relative floor count as converged.
constexpr double kUlpFloor = 0x1.0p-48;

// Classic adaptive Simpson with Richardson extrapolation. tol is halved on
// each split so the per-leaf errors sum to the caller's tolerance.
double refine(SimpsonState& state, double a, double b, double fa, double fm,
              double fb, double whole, double tol) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  // An unrepresentable midpoint means the interval cannot be split further.
  if (!(a < lm && lm < m && m < rm && rm < b)) {
    throw QuadratureError("quadrature tolerance unreachable: interval too "
                          "small to subdivide further");
  }
  if (state.remaining < 2) {
    throw QuadratureError(
        "quadrature tolerance unreachable within the subdivision budget");
  }
  state.remaining -= 2;

  const double flm = state.f(lm);
  const double frm = state.f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol ||
      std::abs(err) <= kUlpFloor * std::abs(left + right)) {
    return left + right + err;
  }
  return refine(state, a, m, fa, flm, fm, left, 0.5 * tol) +
         refine(state, m, b, fm, frm, fb, right, 0.5 * tol);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::size_t max_intervals) {
  if (!(abs_tol > 0.0)) {
    throw DomainError("abs_tol", "quadrature tolerance must be positive");
  }
  if (a == b) {
    return 0.0;
  }
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  SimpsonState state{f, max_intervals};
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return sign * refine(state, a, b, fa, fm, fb, whole, abs_tol);
}

}  // namespace optnoise
