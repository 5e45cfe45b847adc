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

// Diameter-objective team formation around a rarest-skill pivot.

#ifndef TEAMFORM_DIAMETER_HPP_
#define TEAMFORM_DIAMETER_HPP_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

// All-pairs shortest distances of a host graph under its distance weights,
// with one canonical shortest path per pair.
class DistanceIndex {
 public:
  explicit DistanceIndex(const SkillGraph& host);

  const SkillGraph& host() const { return *host_; }
  Weight distance(NodeId from, NodeId to) const;
  // from, ..., to along the recorded shortest path. Empty when unreachable.
  std::vector<NodeId> path(NodeId from, NodeId to) const;
  // Largest pairwise host distance among members; 0 for fewer than two.
  Weight spread(const NodeSet& members) const;

 private:
  const SkillGraph* host_;
  std::size_t n_;
  std::vector<Weight> dist_;        // n*n, row = source position
  std::vector<std::size_t> pred_;   // n*n
};

// k-th smallest distance from pivot to the support set (the pivot counts at
// distance 0 when it belongs to the support). Infinite when fewer than k
// support nodes are reachable.
Weight d_k(NodeId pivot, const NodeSet& support, int k, const DistanceIndex& idx);

// Nodes on the canonical shortest paths from the pivot to its k nearest
// support nodes (ties to the smaller key), pivot included.
NodeSet path_k(NodeId pivot, const NodeSet& support, int k, const DistanceIndex& idx);

struct PivotRadii {
  NodeId pivot;
  std::vector<std::pair<std::string, Weight>> per_skill;  // R_ia in task order
  Weight radius;                                          // R_i
};

struct PivotReport {
  std::string rare_skill;
  std::vector<PivotRadii> per_pivot;
  NodeId chosen = -1;
};

struct DiameterOutcome {
  Team team;              // statistics on the induced subgraph
  Weight host_diameter;   // largest host-graph distance between members
  PivotReport report;
};

// Rarest-skill pivot search. The rare skill is the task skill with the
// smallest support (earlier requirement on ties); the pivot minimizing the
// largest per-skill radius wins (smaller key on ties). Requirements with a
// zero count are ignored; an empty task yields the empty team.
DiameterOutcome min_diameter(const SkillGraph& g, const Task& task);
DiameterOutcome min_diameter(const DistanceIndex& idx, const Task& task);

// "pivot <id> R=<value>" per pivot, then "chosen <id>".
void write_pivot_report(std::ostream& out, const PivotReport& report, const SkillGraph& g);

}  // namespace teamform

#endif  // TEAMFORM_DIAMETER_HPP_
