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

#include "optnoise/json_io.h"

#include "optnoise/format.h"

namespace optnoise {

nlohmann::json palpha_to_json(const PAlphaDist& d) {
  return nlohmann::json{{"delta", d.delta()},
                        {"sensitivity", d.sensitivity()},
                        {"alpha", d.alpha()}};
}

PAlphaDist palpha_from_json(const nlohmann::json& j) {
  return PAlphaDist(j.at("delta").get<double>(),
                    j.at("sensitivity").get<double>(),
                    j.at("alpha").get<double>());
}

nlohmann::json audit_report_to_json(const AuditReport& report) {
  return nlohmann::json{{"delta_hat", round12(report.delta_hat)},
                        {"worst_shift", round12(report.worst_shift)},
                        {"method", audit_method_name(report.method)},
                        {"sample_count", report.sample_count}};
}

std::string audit_method_name(AuditMethod method) {
  switch (method) {
    case AuditMethod::kAnalyticPAlpha:
      return "analytic_palpha";
    case AuditMethod::kAnalyticGaussian:
      return "analytic_gaussian";
    case AuditMethod::kEmpiricalHistogram:
      return "empirical_histogram";
  }
  return "unknown";
}

}  // namespace optnoise
