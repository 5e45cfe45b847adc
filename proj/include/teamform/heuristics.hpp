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

// Post-processing of density solutions into single connected teams:
// per-component enhancement with skilled neighbours, then optional trimming
// of nodes that hold none of the task's skills.

#ifndef TEAMFORM_HEURISTICS_HPP_
#define TEAMFORM_HEURISTICS_HPP_

#include <optional>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

struct ComponentCandidate {
  NodeSet members;           // C'_i
  NodeSet source_component;  // C_i
  NodeSet frontier_added;    // neighbours pulled in, in scan order
  bool satisfied = false;
};

// For each component of G[solution] (ordered by smallest key), scans the
// component's outside neighbours in key order and adds every neighbour that
// holds a skill whose quota is still short, stopping once the task is met.
std::vector<ComponentCandidate> enhance_component(const NodeSet& solution, const Task& task,
                                                  const SkillGraph& g);

// True when the node holds none of the task's skills.
bool is_unskilled(const SkillGraph& g, NodeId v, const Task& task);
std::size_t unskilled_count(const SkillGraph& g, const NodeSet& members, const Task& task);

// Repeatedly takes the unskilled member of lowest weighted degree inside the
// current candidate (smaller key on ties) and drops it when the rest stays
// connected. Stops when the queue is empty or, with a budget, once at most
// `budget` unskilled members remain.
NodeSet trim_candidate(const NodeSet& members, const Task& task, const SkillGraph& g,
                       std::optional<std::size_t> budget);

struct HeuristicOutcome {
  Team team;       // the connected, quota-satisfying result
  NodeSet source;  // the enhanced candidate it was derived from
  Team raw;        // the density solver's own team
};

HeuristicOutcome enhanced_dense(const SkillGraph& g, const Task& task);
// Unskilled budget is the sum of all requirement counts.
HeuristicOutcome partial_trimmed_dense(const SkillGraph& g, const Task& task);
HeuristicOutcome complete_trimmed_dense(const SkillGraph& g, const Task& task);

}  // namespace teamform

#endif  // TEAMFORM_HEURISTICS_HPP_
