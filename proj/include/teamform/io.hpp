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

// Line-oriented text formats.
//
//   graph:  node <id> [skill[,skill...]]
//           edge <u> <v> <affinity> [<distance>]   (distance defaults to affinity)
//           loop <id> <weight>                     (only emitted for shrunk graphs)
//   task:   require <skill> <k>
//
// '#' starts a comment anywhere on a line. Weights are non-negative decimals
// with at most six fractional digits.

#ifndef TEAMFORM_IO_HPP_
#define TEAMFORM_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

SkillGraph load_graph(std::string_view text);
std::string serialize_graph(const SkillGraph& g);

Task load_task(std::string_view text);
std::string serialize_task(const Task& task);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

namespace detail {

// Splits `text` into lines, strips comments, and tokenizes on whitespace.
// Returns (1-based line number, tokens) for every non-blank line.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize_lines(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace detail

}  // namespace teamform

#endif  // TEAMFORM_IO_HPP_
