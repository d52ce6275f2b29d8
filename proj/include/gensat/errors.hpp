// Copyright 2026 The gensat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENSAT_ERRORS_HPP_
#define GENSAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gensat {

// Raised when arguments violate an operation's domain. `code()` is a short
// machine-readable tag surfaced by the CLI.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed text input (graph6, pattern strings, grid files).
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : DomainError("parse_error",
                    message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gensat

#endif  // GENSAT_ERRORS_HPP_
