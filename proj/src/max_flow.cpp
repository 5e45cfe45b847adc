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

#include "teamform/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace teamform {

MaxFlow::MaxFlow(std::size_t vertices) : out_(vertices), level_(vertices), next_(vertices) {}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, Capacity capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  std::size_t idx = arcs_.size();
  arcs_.push_back({to, capacity});
  out_[from].push_back(idx);
  arcs_.push_back({from, 0});
  out_[to].push_back(idx + 1);
  return idx;
}

void MaxFlow::add_undirected(std::size_t a, std::size_t b, Capacity capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  std::size_t idx = arcs_.size();
  arcs_.push_back({b, capacity});
  out_[a].push_back(idx);
  arcs_.push_back({a, capacity});
  out_[b].push_back(idx + 1);
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t a : out_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::augment(std::size_t v, std::size_t sink, Capacity limit) {
  if (v == sink) return limit;
  for (; next_[v] < out_[v].size(); ++next_[v]) {
    std::size_t a = out_[v][next_[v]];
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
    Capacity pushed = augment(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[a ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::solve(std::size_t source, std::size_t sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (Capacity pushed = augment(source, sink, std::numeric_limits<Capacity>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(std::size_t source) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t a : out_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace teamform
