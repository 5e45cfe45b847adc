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

#include "teamform/heuristics.hpp"

#include <algorithm>

#include "teamform/densest.hpp"
#include "teamform/errors.hpp"

namespace teamform {
namespace {

bool fills_deficit(const SkillGraph& g, NodeId v, const NodeSet& members, const Task& task) {
  for (const auto& req : task.requirements()) {
    if (g.has_skill(v, req.skill) && skill_count(g, members, req.skill) < static_cast<std::size_t>(req.count)) {
      return true;
    }
  }
  return false;
}

Weight degree_within(const SkillGraph& g, NodeId v, const NodeSet& members) {
  Weight w;
  for (const auto& inc : g.incident(v)) {
    if (set_contains(members, inc.neighbor)) w += g.edges()[inc.edge].affinity;
  }
  return w;
}

std::vector<ComponentCandidate> satisfied_candidates(const Team& raw, const Task& task, const SkillGraph& g) {
  auto all = enhance_component(raw.members, task, g);
  std::vector<ComponentCandidate> out;
  for (auto& c : all) {
    if (c.satisfied) out.push_back(std::move(c));
  }
  if (out.empty()) throw HeuristicFailure("no component of the density solution can be enhanced to meet the task");
  return out;
}

// Smaller set first, then lexicographically smaller.
bool smaller(const NodeSet& a, const NodeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<ComponentCandidate> enhance_component(const NodeSet& solution, const Task& task,
                                                  const SkillGraph& g) {
  std::vector<ComponentCandidate> out;
  SkillGraph sub = induced_subgraph(g, solution);
  for (const NodeSet& comp : connected_components(sub)) {
    ComponentCandidate cand;
    cand.source_component = comp;
    cand.members = comp;
    std::vector<NodeId> frontier;
    for (NodeId v : comp) {
      for (const auto& inc : g.incident(v)) {
        if (!set_contains(comp, inc.neighbor)) frontier.push_back(inc.neighbor);
      }
    }
    for (NodeId v : make_node_set(std::move(frontier))) {
      if (satisfies(g, cand.members, task)) break;
      if (fills_deficit(g, v, cand.members, task)) {
        cand.members.insert(std::upper_bound(cand.members.begin(), cand.members.end(), v), v);
        cand.frontier_added.push_back(v);
      }
    }
    cand.satisfied = satisfies(g, cand.members, task);
    out.push_back(std::move(cand));
  }
  return out;
}

bool is_unskilled(const SkillGraph& g, NodeId v, const Task& task) {
  return std::none_of(task.requirements().begin(), task.requirements().end(),
                      [&](const Requirement& r) { return g.has_skill(v, r.skill); });
}

std::size_t unskilled_count(const SkillGraph& g, const NodeSet& members, const Task& task) {
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [&](NodeId v) { return is_unskilled(g, v, task); }));
}

NodeSet trim_candidate(const NodeSet& members, const Task& task, const SkillGraph& g,
                       std::optional<std::size_t> budget) {
  NodeSet current = members;
  NodeSet queue;
  for (NodeId v : members) {
    if (is_unskilled(g, v, task)) queue.push_back(v);
  }
  while (!queue.empty()) {
    if (budget && unskilled_count(g, current, task) <= *budget) break;
    auto pick = queue.begin();
    Weight pick_degree = degree_within(g, *pick, current);
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it) {
      Weight d = degree_within(g, *it, current);
      if (d < pick_degree) {
        pick = it;
        pick_degree = d;
      }
    }
    NodeId u = *pick;
    queue.erase(pick);
    if (current.size() <= 1) continue;
    NodeSet rest = set_difference(current, {u});
    if (is_connected(induced_subgraph(g, rest))) current = std::move(rest);
  }
  return current;
}

HeuristicOutcome enhanced_dense(const SkillGraph& g, const Task& task) {
  HeuristicOutcome out;
  out.raw = densest_alk(g, task).team;
  if (out.raw.members.empty()) return out;
  auto cands = satisfied_candidates(out.raw, task, g);
  const ComponentCandidate* best = &cands.front();
  for (const auto& c : cands) {
    if (smaller(c.members, best->members)) best = &c;
  }
  out.source = best->members;
  out.team = make_team(g, best->members);
  return out;
}

HeuristicOutcome partial_trimmed_dense(const SkillGraph& g, const Task& task) {
  HeuristicOutcome out;
  out.raw = densest_alk(g, task).team;
  if (out.raw.members.empty()) return out;
  const auto budget = static_cast<std::size_t>(task.total_count());
  bool found = false;
  for (const auto& c : satisfied_candidates(out.raw, task, g)) {
    NodeSet trimmed = trim_candidate(c.members, task, g, budget);
    if (unskilled_count(g, trimmed, task) > budget) continue;
    Team t = make_team(g, trimmed);
    bool better = !found || t.density > out.team.density ||
                  (t.density == out.team.density && smaller(t.members, out.team.members));
    if (better) {
      out.team = std::move(t);
      out.source = c.members;
      found = true;
    }
  }
  if (!found) throw HeuristicFailure("every enhanced component exceeds the unskilled-node budget");
  return out;
}

HeuristicOutcome complete_trimmed_dense(const SkillGraph& g, const Task& task) {
  HeuristicOutcome out;
  out.raw = densest_alk(g, task).team;
  if (out.raw.members.empty()) return out;
  bool found = false;
  for (const auto& c : satisfied_candidates(out.raw, task, g)) {
    NodeSet trimmed = trim_candidate(c.members, task, g, std::nullopt);
    if (!found || smaller(trimmed, out.team.members)) {
      out.team = make_team(g, trimmed);
      out.source = c.members;
      found = true;
    }
  }
  return out;
}

}  // namespace teamform
