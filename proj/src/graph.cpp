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

#include "teamform/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "teamform/errors.hpp"

namespace teamform {

NodeSet make_node_set(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool set_contains(const NodeSet& set, NodeId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

bool is_subset(const NodeSet& sub, const NodeSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const NodeSet& a, const NodeSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// --- SkillGraph -------------------------------------------------------------

void SkillGraph::insert_node(NodeId key, std::string label, std::vector<std::string> skills) {
  if (!keys_.empty() && key <= keys_.back()) {
    throw DomainError("node keys must be added in increasing order");
  }
  if (label.empty()) throw DomainError("empty node label");
  if (by_label_.count(label)) throw DomainError("duplicate node " + label);
  std::vector<std::string> unique_skills;
  for (auto& s : skills) {
    if (s.empty()) throw DomainError("empty skill name on node " + label);
    if (std::find(unique_skills.begin(), unique_skills.end(), s) == unique_skills.end()) {
      unique_skills.push_back(std::move(s));
    }
  }
  by_label_.emplace(label, key);
  keys_.push_back(key);
  labels_.push_back(std::move(label));
  skills_.push_back(std::move(unique_skills));
  loops_.emplace_back();
  adj_.emplace_back();
}

NodeId SkillGraph::add_node(std::string label, std::vector<std::string> skills) {
  NodeId key = keys_.empty() ? 0 : keys_.back() + 1;
  insert_node(key, std::move(label), std::move(skills));
  return key;
}

void SkillGraph::add_node_with_key(NodeId key, std::string label, std::vector<std::string> skills) {
  insert_node(key, std::move(label), std::move(skills));
}

void SkillGraph::add_edge(NodeId u, NodeId v, Weight affinity, Weight distance) {
  if (u == v) throw DomainError("edge joins node " + label(u) + " to itself");
  if (affinity.is_infinite() || distance.is_infinite()) throw DomainError("infinite edge weight");
  if (u > v) std::swap(u, v);
  std::size_t pu = position(u);
  std::size_t pv = position(v);
  if (edge_index_.count({u, v})) {
    throw DomainError("duplicate edge " + labels_[pu] + " " + labels_[pv]);
  }
  std::size_t idx = edges_.size();
  edges_.push_back({u, v, affinity, distance});
  edge_index_.emplace(std::make_pair(u, v), idx);
  adj_[pu].push_back({v, idx});
  adj_[pv].push_back({u, idx});
  std::sort(adj_[pu].begin(), adj_[pu].end(),
            [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  std::sort(adj_[pv].begin(), adj_[pv].end(),
            [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

void SkillGraph::add_loop(NodeId v, Weight weight, std::optional<NodeId> partner) {
  if (weight.is_infinite()) throw DomainError("infinite loop weight");
  loops_[position(v)].push_back({weight, partner});
}

void SkillGraph::remove_edge(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  auto it = edge_index_.find({u, v});
  if (it == edge_index_.end()) throw DomainError("no such edge");
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != it->second) kept.push_back(edges_[i]);
  }
  edges_.clear();
  edge_index_.clear();
  for (auto& list : adj_) list.clear();
  for (const Edge& e : kept) add_edge(e.u, e.v, e.affinity, e.distance);
}

bool SkillGraph::contains(NodeId id) const { return set_contains(keys_, id); }

std::size_t SkillGraph::position(NodeId id) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), id);
  if (it == keys_.end() || *it != id) {
    throw DomainError("unknown node key " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

std::optional<NodeId> SkillGraph::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

NodeId SkillGraph::at(std::string_view label) const {
  auto id = find(label);
  if (!id) throw DomainError("unknown node " + std::string(label));
  return *id;
}

NodeSet SkillGraph::lookup(std::initializer_list<std::string_view> labels) const {
  std::vector<NodeId> ids;
  for (auto l : labels) ids.push_back(at(l));
  return make_node_set(std::move(ids));
}

std::vector<std::string> SkillGraph::labels_of(const NodeSet& members) const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (NodeId id : members) out.push_back(label(id));
  return out;
}

bool SkillGraph::has_skill(NodeId id, std::string_view skill) const {
  const auto& s = skills(id);
  return std::find(s.begin(), s.end(), skill) != s.end();
}

NodeSet SkillGraph::support(std::string_view skill) const {
  NodeSet out;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    const auto& s = skills_[i];
    if (std::find(s.begin(), s.end(), skill) != s.end()) out.push_back(keys_[i]);
  }
  return out;
}

std::vector<std::string> SkillGraph::skill_names() const {
  std::vector<std::string> out;
  for (const auto& list : skills_) {
    for (const auto& s : list) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

std::optional<std::size_t> SkillGraph::find_edge(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_index_.find({u, v});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SkillGraph::loop_count() const {
  std::size_t n = 0;
  for (const auto& l : loops_) n += l.size();
  return n;
}

Weight SkillGraph::total_weight() const {
  Weight w;
  for (const Edge& e : edges_) w += e.affinity;
  for (const auto& list : loops_) {
    for (const Loop& l : list) w += l.weight;
  }
  return w;
}

bool operator==(const SkillGraph& a, const SkillGraph& b) {
  if (a.keys_ != b.keys_ || a.labels_ != b.labels_ || a.skills_ != b.skills_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (const auto& [key, idx] : a.edge_index_) {
    auto it = b.edge_index_.find(key);
    if (it == b.edge_index_.end()) return false;
    const Edge& ea = a.edges_[idx];
    const Edge& eb = b.edges_[it->second];
    if (ea.affinity != eb.affinity || ea.distance != eb.distance) return false;
  }
  for (std::size_t i = 0; i < a.loops_.size(); ++i) {
    const auto& la = a.loops_[i];
    const auto& lb = b.loops_[i];
    if (la.size() != lb.size()) return false;
    for (std::size_t j = 0; j < la.size(); ++j) {
      if (la[j].weight != lb[j].weight || la[j].partner != lb[j].partner) return false;
    }
  }
  return true;
}

// --- Task -------------------------------------------------------------------

Task::Task(std::initializer_list<Requirement> reqs) {
  for (const auto& r : reqs) add(r.skill, r.count);
}

void Task::add(std::string skill, int count) {
  if (skill.empty()) throw DomainError("empty skill name in task");
  if (count < 0) throw DomainError("negative count for skill " + skill);
  if (mentions(skill)) throw DomainError("duplicate skill " + skill + " in task");
  reqs_.push_back({std::move(skill), count});
}

int Task::total_count() const {
  int total = 0;
  for (const auto& r : reqs_) total += r.count;
  return total;
}

bool Task::mentions(std::string_view skill) const {
  return std::any_of(reqs_.begin(), reqs_.end(), [&](const Requirement& r) { return r.skill == skill; });
}

// --- primitives -------------------------------------------------------------

SkillGraph induced_subgraph(const SkillGraph& g, const NodeSet& members) {
  SkillGraph out;
  for (NodeId id : members) {
    if (!g.contains(id)) throw DomainError("member " + std::to_string(id) + " not in graph");
    out.add_node_with_key(id, g.label(id), g.skills(id));
    for (const Loop& l : g.loops(id)) out.add_loop(id, l.weight, l.partner);
  }
  for (const Edge& e : g.edges()) {
    if (set_contains(members, e.u) && set_contains(members, e.v)) {
      out.add_edge(e.u, e.v, e.affinity, e.distance);
    }
  }
  return out;
}

Rational density(const SkillGraph& g) {
  if (g.empty()) throw DomainError("density of an empty graph");
  return g.total_weight().to_rational() / Rational(static_cast<std::int64_t>(g.size()));
}

namespace detail {

void dijkstra(const SkillGraph& g, std::size_t source, std::vector<Weight>& dist,
              std::vector<std::size_t>& pred) {
  const std::size_t n = g.size();
  dist.assign(n, Weight::infinite());
  pred.assign(n, SIZE_MAX);
  std::vector<char> done(n, 0);
  using Item = std::pair<Weight, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[source] = Weight();
  queue.push({Weight(), source});
  const NodeSet& keys = g.nodes();
  while (!queue.empty()) {
    auto [d, p] = queue.top();
    queue.pop();
    if (done[p]) continue;
    done[p] = 1;
    for (const auto& inc : g.incident(keys[p])) {
      std::size_t q = g.position(inc.neighbor);
      Weight nd = d + g.edges()[inc.edge].distance;
      if (nd < dist[q]) {
        dist[q] = nd;
        pred[q] = p;
        queue.push({nd, q});
      }
    }
  }
}

}  // namespace detail

std::map<NodeId, Weight> shortest_distances(const SkillGraph& g, NodeId source) {
  std::vector<Weight> dist;
  std::vector<std::size_t> pred;
  detail::dijkstra(g, g.position(source), dist, pred);
  std::map<NodeId, Weight> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.emplace(g.nodes()[i], dist[i]);
  return out;
}

Weight diameter(const SkillGraph& g) {
  if (g.empty()) throw DomainError("diameter of an empty graph");
  Weight best;
  std::vector<Weight> dist;
  std::vector<std::size_t> pred;
  for (std::size_t s = 0; s < g.size(); ++s) {
    detail::dijkstra(g, s, dist, pred);
    for (Weight d : dist) {
      if (d.is_infinite()) return Weight::infinite();
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<NodeSet> connected_components(const SkillGraph& g) {
  std::vector<NodeSet> out;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    NodeSet comp;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      std::size_t p = stack.back();
      stack.pop_back();
      NodeId id = g.nodes()[p];
      comp.push_back(id);
      for (const auto& inc : g.incident(id)) {
        std::size_t q = g.position(inc.neighbor);
        if (!seen[q]) {
          seen[q] = 1;
          stack.push_back(q);
        }
      }
    }
    out.push_back(make_node_set(std::move(comp)));
  }
  return out;
}

bool is_connected(const SkillGraph& g) { return connected_components(g).size() <= 1; }

Weight weighted_degree(const SkillGraph& g, NodeId v) {
  Weight w;
  for (const auto& inc : g.incident(v)) w += g.edges()[inc.edge].affinity;
  for (const Loop& l : g.loops(v)) w += l.weight;
  return w;
}

std::size_t skill_count(const SkillGraph& g, const NodeSet& members, std::string_view skill) {
  std::size_t n = 0;
  for (NodeId id : members) {
    if (g.has_skill(id, skill)) ++n;
  }
  return n;
}

bool satisfies(const SkillGraph& g, const NodeSet& members, const Task& task) {
  for (const auto& r : task.requirements()) {
    if (skill_count(g, members, r.skill) < static_cast<std::size_t>(r.count)) return false;
  }
  return true;
}

void require_feasible(const SkillGraph& g, const Task& task) {
  for (const auto& r : task.requirements()) {
    std::size_t have = g.support(r.skill).size();
    if (have < static_cast<std::size_t>(r.count)) {
      throw InfeasibleError(r.skill, "infeasible: skill " + r.skill + " needs " +
                                         std::to_string(r.count) + " nodes but graph has " +
                                         std::to_string(have));
    }
  }
}

Team make_team(const SkillGraph& source, const NodeSet& members) {
  Team t;
  t.members = members;
  if (members.empty()) return t;
  SkillGraph sub = induced_subgraph(source, members);
  t.total_weight = sub.total_weight();
  t.density = density(sub);
  t.components = static_cast<int>(connected_components(sub).size());
  t.diameter = diameter(sub);
  return t;
}

}  // namespace teamform
