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

#ifndef OPTNOISE_RANDOM_H_
#define OPTNOISE_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace optnoise {

// Seeded, reproducible stream of random numbers.
//
// Wraps std::mt19937_64 (bit-exact across platforms by the standard) and
// derives doubles directly from raw 64-bit draws, so output never depends on
// the implementation-defined std::uniform_real_distribution. Identical
// (seed, stream) and draw position always yield identical values. A stream is
// single-owner and mutable; parallel batch generation should give each worker
// its own stream index.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix(mix(seed) + stream)) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; never exactly zero, safe under log().
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [-1, 1).
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

  // Standard normal draw via the trigonometric Box-Muller transform.
  // Rejection-free: consumes exactly two uniforms per call (the sine
  // companion is discarded), so stream positions stay predictable.
  double normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * std::numbers::pi * uniform01();
    return r * std::cos(t);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  // splitmix64 finalizer; decorrelates nearby seed/stream values.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace optnoise

#endif  // OPTNOISE_RANDOM_H_
