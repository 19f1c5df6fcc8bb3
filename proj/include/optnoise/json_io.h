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

#ifndef OPTNOISE_JSON_IO_H_
#define OPTNOISE_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "optnoise/audit.h"
#include "optnoise/palpha.h"

namespace optnoise {

// {"delta": ..., "sensitivity": ..., "alpha": ...}; derived fields are
// recomputed on load.
nlohmann::json palpha_to_json(const PAlphaDist& d);
PAlphaDist palpha_from_json(const nlohmann::json& j);

nlohmann::json audit_report_to_json(const AuditReport& report);

std::string audit_method_name(AuditMethod method);

}  // namespace optnoise

#endif  // OPTNOISE_JSON_IO_H_
