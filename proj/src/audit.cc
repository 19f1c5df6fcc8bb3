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

#include "optnoise/audit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>

#include "optnoise/errors.h"

namespace optnoise {
namespace {

double parse_double_field(std::string_view field, std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "line " + std::to_string(line) +
                               ": expected a number, got '" +
                               std::string(field) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

int Histogram::bin_index(double x) const {
  const int raw = static_cast<int>(std::floor((x - lo) / bin_width));
  return std::clamp(raw, 0, bin_count() - 1);
}

double Histogram::total_mass() const {
  double total = atom_at_zero;
  for (const double m : masses) {
    total += m;
  }
  return total;
}

Histogram histogram_from_samples(std::span<const double> samples, double range,
                                 int bins) {
  if (samples.empty()) {
    throw DomainError("samples", "sample list must be nonempty");
  }
  if (!(range > 0.0)) {
    throw DomainError("range", "histogram range must be positive");
  }
  if (bins < 1) {
    throw DomainError("bins", "bins must be positive");
  }
  Histogram h;
  h.lo = -range;
  h.hi = range;
  h.bin_width = 2.0 * range / bins;
  h.masses.assign(static_cast<std::size_t>(bins), 0.0);
  const double weight = 1.0 / static_cast<double>(samples.size());
  for (const double x : samples) {
    if (!std::isfinite(x)) {
      throw DomainError("samples", "samples must be finite");
    }
    if (x == 0.0) {
      h.atom_at_zero += weight;
    } else {
      h.masses[static_cast<std::size_t>(h.bin_index(x))] += weight;
    }
  }
  return h;
}

AuditReport analytic_delta_palpha(const PAlphaDist& d) {
  const double half = d.sensitivity() / 2.0;
  return AuditReport{d.interval_prob(-half, half), d.sensitivity(),
                     AuditMethod::kAnalyticPAlpha, 0};
}

AuditReport analytic_delta_gaussian(double sigma, double sensitivity) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("sigma", "sigma must be positive");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity", "sensitivity must be positive");
  }
  // 2 * Phi(z) - 1 written as erf(z / sqrt(2)): no cancellation for small z.
  const double z = sensitivity / (2.0 * sigma);
  const double leak = std::erf(z / std::numbers::sqrt2);
  return AuditReport{std::clamp(leak, 0.0, 1.0), sensitivity,
                     AuditMethod::kAnalyticGaussian, 0};
}

Histogram audit_histogram(std::span<const double> samples, double sensitivity,
                          int bins) {
  if (samples.empty()) {
    throw DomainError("samples", "sample list must be nonempty");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity", "sensitivity must be positive");
  }
  if (bins < 100) {
    throw DomainError("bins", "bins must be at least 100");
  }
  double max_abs = 0.0;
  for (const double x : samples) {
    max_abs = std::fmax(max_abs, std::abs(x));
  }
  return histogram_from_samples(samples, max_abs + sensitivity, bins);
}

AuditReport empirical_delta(std::span<const double> samples,
                            double sensitivity, int bins, int shift_grid) {
  if (shift_grid < 10) {
    throw DomainError("shift_grid", "shift grid must have at least 10 points");
  }
  const Histogram h = audit_histogram(samples, sensitivity, bins);

  double best = 0.0;
  double best_shift = sensitivity / shift_grid;
  for (int j = 1; j <= shift_grid; ++j) {
    const double d = sensitivity * static_cast<double>(j) / shift_grid;
    const double value = shift_delta(h, d);
    // >= keeps the largest shift among maximizers; the distance is
    // nondecreasing in the shift for unimodal inputs.
    if (value >= best) {
      best = value;
      best_shift = d;
    }
  }
  // Accumulated bin masses can overshoot 1 by a few ulps.
  return AuditReport{std::clamp(best, 0.0, 1.0), best_shift,
                     AuditMethod::kEmpiricalHistogram, samples.size()};
}

double shift_delta(const Histogram& h, double d) {
  if (h.masses.empty() || !(h.bin_width > 0.0)) {
    throw DomainError("histogram", "histogram must have bins");
  }
  if (h.atom_at_zero > 0.0 && (h.lo > 0.0 || h.hi < 0.0)) {
    throw DomainError("histogram",
                      "a histogram with an origin atom must cover 0");
  }
  const long count = h.bin_count();
  const double ratio = d / h.bin_width;
  // Any shift beyond the bin range behaves like a full-range shift.
  const long k = std::abs(ratio) >= static_cast<double>(count)
                     ? (ratio > 0.0 ? count : -count)
                     : std::lround(ratio);
  if (k == 0) {
    return 0.0;
  }
  std::vector<double> q = h.masses;
  q[static_cast<std::size_t>(h.bin_index(0.0))] += h.atom_at_zero;

  double total = 0.0;
  for (long i = 0; i < count; ++i) {
    const long j = i + k;
    const double shifted =
        (j >= 0 && j < count) ? q[static_cast<std::size_t>(j)] : 0.0;
    total += std::fmax(0.0, q[static_cast<std::size_t>(i)] - shifted);
  }
  return total;
}

Histogram symmetrize(const Histogram& h) {
  if (h.lo != -h.hi) {
    throw DomainError("histogram", "binning must be symmetric about 0");
  }
  Histogram out = h;
  const std::size_t count = h.masses.size();
  for (std::size_t i = 0; i < count; ++i) {
    out.masses[i] = 0.5 * (h.masses[i] + h.masses[count - 1 - i]);
  }
  return out;
}

bool check_dp(const PAlphaDist& d, double target_delta) {
  if (!(target_delta > 0.0 && target_delta < 1.0)) {
    throw DomainError("target_delta", "target delta must lie in (0,1)");
  }
  const double half = d.sensitivity() / 2.0;
  return d.interval_prob(-half, half) <= target_delta + 1e-12;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,mass\n";
  char buffer[64];
  const auto fmt = [&buffer](double v) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return std::string(buffer);
  };
  for (int i = 0; i < h.bin_count(); ++i) {
    const double bin_lo = h.lo + i * h.bin_width;
    out << fmt(bin_lo) << ',' << fmt(bin_lo + h.bin_width) << ','
        << fmt(h.masses[static_cast<std::size_t>(i)]) << '\n';
  }
  out << "atom,0," << fmt(h.atom_at_zero) << '\n';
}

Histogram read_histogram_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw ParseError(1, "empty histogram CSV");
  }
  ++line_no;
  if (trim(line) != "bin_lo,bin_hi,mass") {
    throw ParseError(line_no, "line 1: expected header 'bin_lo,bin_hi,mass'");
  }

  Histogram h;
  bool saw_atom = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 3) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected 3 comma-separated fields");
    }
    if (fields[0] == "atom") {
      if (saw_atom) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": duplicate atom row");
      }
      h.atom_at_zero = parse_double_field(fields[2], line_no);
      saw_atom = true;
      continue;
    }
    if (saw_atom) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": bin rows after the atom row");
    }
    const double bin_lo = parse_double_field(fields[0], line_no);
    const double bin_hi = parse_double_field(fields[1], line_no);
    const double mass = parse_double_field(fields[2], line_no);
    if (h.masses.empty()) {
      h.lo = bin_lo;
      h.bin_width = bin_hi - bin_lo;
      if (!(h.bin_width > 0.0)) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": bin_hi must exceed bin_lo");
      }
    } else {
      const double expected = h.lo + h.masses.size() * h.bin_width;
      if (std::abs(bin_lo - expected) > 1e-6 * h.bin_width) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": bins must be contiguous and uniform");
      }
    }
    if (mass < 0.0) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": mass must be nonnegative");
    }
    h.masses.push_back(mass);
    h.hi = bin_hi;
  }

  if (h.masses.empty()) {
    throw ParseError(line_no + 1, "histogram CSV has no bin rows");
  }
  if (!saw_atom) {
    throw ParseError(line_no + 1, "histogram CSV is missing the atom row");
  }
  if (std::abs(h.total_mass() - 1.0) > 1e-9) {
    throw ParseError(line_no, "histogram masses must sum to 1");
  }
  return h;
}

std::vector<double> parse_samples(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view field = trim(line);
    if (field.empty()) {
      continue;
    }
    const double value = parse_double_field(field, line_no);
    if (!std::isfinite(value)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": sample must be a finite real");
    }
    samples.push_back(value);
  }
  return samples;
}

}  // namespace optnoise
