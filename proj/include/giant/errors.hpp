// Copyright 2026 The Giant Authors
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

#ifndef GIANT_ERRORS_HPP_
#define GIANT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace giant {

// Argument outside the mathematical domain of a solver or distribution.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid user-facing configuration (bad flag combination, unknown metric).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph shape violates an operation's precondition.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input larger than an exact algorithm supports.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A sampler hit its node cap or redraw cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace giant

#endif  // GIANT_ERRORS_HPP_
