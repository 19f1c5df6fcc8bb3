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

#ifndef OPTNOISE_QUADRATURE_H_
#define OPTNOISE_QUADRATURE_H_

#include <cstddef>
#include <functional>

namespace optnoise {

inline constexpr std::size_t kDefaultQuadBudget = std::size_t{1} << 20;
inline constexpr double kDefaultQuadTol = 1e-9;

// Integrates f over [a, b] by adaptive Simpson subdivision until the
// estimated absolute error drops below abs_tol. Panels whose estimated error
// is within a few ulps of their value also count as converged, since double
// arithmetic cannot do better. Throws QuadratureError if the tolerance is
// unreachable within max_intervals subintervals, and DomainError if
// abs_tol <= 0.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::size_t max_intervals = kDefaultQuadBudget);

}  // namespace optnoise

#endif  // OPTNOISE_QUADRATURE_H_
