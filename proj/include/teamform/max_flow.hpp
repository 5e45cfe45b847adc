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

#ifndef TEAMFORM_MAX_FLOW_HPP_
#define TEAMFORM_MAX_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace teamform {

// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(std::size_t vertices);

  // Adds a directed arc; returns its index.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity);
  // Adds a pair of opposite arcs sharing one capacity each way.
  void add_undirected(std::size_t a, std::size_t b, Capacity capacity);

  Capacity solve(std::size_t source, std::size_t sink);

  // After solve(): vertices reachable from the source in the residual
  // network, i.e. the source side of the minimal minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    Capacity residual;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Capacity augment(std::size_t v, std::size_t sink, Capacity limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace teamform

#endif  // TEAMFORM_MAX_FLOW_HPP_
