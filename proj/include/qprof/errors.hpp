// Copyright 2026 The qprof Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qprof {

/// A size argument (qubit count, grid dimension) was zero or out of range.
class InvalidSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generic malformed-argument error (unknown level, mixed run ids, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant of a circuit, target or layout does not hold.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Text input could not be parsed. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchedulingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation request exceeds the memory guard, or contains unexpanded boxes.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPass : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UndefinedShare : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qprof
