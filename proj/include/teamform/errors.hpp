// Copyright 2026 The Teamform Authors
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

#ifndef TEAMFORM_ERRORS_HPP_
#define TEAMFORM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace teamform {

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Argument outside an operation's domain (unknown node, empty graph, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A task that cannot be met by the graph at hand.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string skill, const std::string& what)
      : std::runtime_error(what), skill_(std::move(skill)) {}
  const std::string& skill() const { return skill_; }

 private:
  std::string skill_;
};

// A post-processing heuristic produced no admissible team.
class HeuristicFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search refused because the instance exceeds its size guard.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace teamform

#endif  // TEAMFORM_ERRORS_HPP_
