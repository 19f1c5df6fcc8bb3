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

#ifndef OPTNOISE_FORMAT_H_
#define OPTNOISE_FORMAT_H_

#include <cstdio>
#include <cstdlib>
#include <string>

namespace optnoise {

// All user-facing numbers are printed with 12 significant digits, '.' as the
// decimal separator, and no locale dependence, so outputs diff cleanly
// across platforms.
inline std::string fmt_g12(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return std::string(buffer);
}

// The double nearest the 12-significant-digit rendering of v. Used when
// emitting JSON so that serialized numbers match the text formatting.
inline double round12(double v) {
  return std::strtod(fmt_g12(v).c_str(), nullptr);
}

}  // namespace optnoise

#endif  // OPTNOISE_FORMAT_H_
