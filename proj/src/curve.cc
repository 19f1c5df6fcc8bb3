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

#include "optnoise/curve.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "optnoise/errors.h"
#include "optnoise/format.h"
#include "optnoise/optimal.h"

namespace optnoise {

CurveRow compare_costs(double delta, double sensitivity, double n,
                       CostConvention convention) {
  const double optimal = min_cost_ln(delta, sensitivity, n);
  const double gaussian =
      gaussian_cost(calibrate_gaussian(delta, sensitivity), n, convention);
  return CurveRow{delta, optimal, gaussian, optimal / gaussian};
}

CurveTable build_curve(double n, double sensitivity, double delta_min,
                       double delta_max, double step,
                       CostConvention convention) {
  if (!(0.0 < delta_min && delta_min < delta_max && delta_max < 1.0)) {
    throw DomainError("delta_range",
                      "require 0 < delta_min < delta_max < 1");
  }
  if (!(step > 0.0)) {
    throw DomainError("step", "step must be positive");
  }

  CurveTable table;
  table.n = n;
  table.sensitivity = sensitivity;
  for (int i = 0;; ++i) {
    const double delta = delta_min + i * step;
    if (delta > delta_max * (1.0 + 1e-12)) {
      break;
    }
    table.rows.push_back(compare_costs(delta, sensitivity, n, convention));
  }
  return table;
}

void write_curve_csv(std::ostream& out, const CurveTable& table) {
  out << "delta,optimal_cost,gaussian_cost,ratio\n";
  for (const CurveRow& row : table.rows) {
    out << fmt_g12(row.delta) << ',' << fmt_g12(row.optimal_cost) << ','
        << fmt_g12(row.gaussian_cost) << ',' << fmt_g12(row.ratio) << '\n';
  }
}

std::vector<CurveRow> read_curve_rows(std::istream& in) {
  const auto parse_field = [](const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.c_str();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected a number, got '" + field + "'");
    }
    return value;
  };

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(1, "empty curve CSV");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != "delta,optimal_cost,gaussian_cost,ratio") {
    throw ParseError(line_no,
                     "expected header 'delta,optimal_cost,gaussian_cost,ratio'");
  }

  std::vector<CurveRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    CurveRow row{};
    std::string fields[4];
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      const std::size_t comma = line.find(',', start);
      const bool last_field = f == 3;
      if (last_field != (comma == std::string::npos)) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": expected 4 comma-separated fields");
      }
      fields[f] = line.substr(start, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - start);
      start = comma + 1;
    }
    row.delta = parse_field(fields[0], line_no);
    row.optimal_cost = parse_field(fields[1], line_no);
    row.gaussian_cost = parse_field(fields[2], line_no);
    row.ratio = parse_field(fields[3], line_no);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace optnoise
