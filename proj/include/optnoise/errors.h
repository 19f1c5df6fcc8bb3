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

#ifndef OPTNOISE_ERRORS_H_
#define OPTNOISE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optnoise {

// An argument fell outside the mathematical domain of an operation. The
// offending parameter is recorded separately from the message so callers can
// tell, e.g., a bad alpha from a bad delta without parsing text.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string field, const std::string& message)
      : std::domain_error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Adaptive quadrature ran out of subdivision budget before reaching the
// requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A text input (sample list, histogram CSV, curve CSV) failed to parse.
// line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace optnoise

#endif  // OPTNOISE_ERRORS_H_
