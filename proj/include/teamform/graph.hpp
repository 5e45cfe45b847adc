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

// Skill-annotated weighted social graph, tasks, teams and the shared graph
// primitives (induced subgraphs, density, shortest paths, diameter,
// components).

#ifndef TEAMFORM_GRAPH_HPP_
#define TEAMFORM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "teamform/numeric.hpp"

namespace teamform {

// Canonical node key. Keys are assigned in insertion (file) order and are
// preserved by every derived graph, so comparing keys is the canonical
// tie-break everywhere.
using NodeId = std::int32_t;

// Sorted, duplicate-free sequence of node keys.
using NodeSet = std::vector<NodeId>;

NodeSet make_node_set(std::vector<NodeId> ids);
bool set_contains(const NodeSet& set, NodeId id);
bool is_subset(const NodeSet& sub, const NodeSet& super);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
std::size_t intersection_size(const NodeSet& a, const NodeSet& b);

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  Weight affinity;
  Weight distance;
};

// Self-loop weight carried by a node. `partner` names the removed node the
// loop stands in for, when it was produced by shrinking.
struct Loop {
  Weight weight;
  std::optional<NodeId> partner;
};

class SkillGraph {
 public:
  struct Incidence {
    NodeId neighbor;
    std::size_t edge;
  };

  // Appends a node whose key is one past the largest key so far.
  NodeId add_node(std::string label, std::vector<std::string> skills = {});
  // Appends a node with an explicit key, which must exceed every key present.
  void add_node_with_key(NodeId key, std::string label, std::vector<std::string> skills);
  void add_edge(NodeId u, NodeId v, Weight affinity, Weight distance);
  void add_edge(NodeId u, NodeId v, Weight affinity) { add_edge(u, v, affinity, affinity); }
  void add_loop(NodeId v, Weight weight, std::optional<NodeId> partner = std::nullopt);
  void remove_edge(NodeId u, NodeId v);

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  const NodeSet& nodes() const { return keys_; }
  bool contains(NodeId id) const;
  // Dense position of a node in nodes(); throws DomainError when absent.
  std::size_t position(NodeId id) const;

  const std::string& label(NodeId id) const { return labels_[position(id)]; }
  std::optional<NodeId> find(std::string_view label) const;
  NodeId at(std::string_view label) const;
  NodeSet lookup(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(const NodeSet& members) const;

  const std::vector<std::string>& skills(NodeId id) const { return skills_[position(id)]; }
  bool has_skill(NodeId id, std::string_view skill) const;
  // S(a): every node holding `skill`, in canonical order.
  NodeSet support(std::string_view skill) const;
  // Distinct skill names in order of first appearance.
  std::vector<std::string> skill_names() const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;
  const std::vector<Incidence>& incident(NodeId id) const { return adj_[position(id)]; }
  const std::vector<Loop>& loops(NodeId id) const { return loops_[position(id)]; }
  std::size_t loop_count() const;

  // Sum of edge affinities plus every loop weight.
  Weight total_weight() const;

  friend bool operator==(const SkillGraph& a, const SkillGraph& b);

 private:
  void insert_node(NodeId key, std::string label, std::vector<std::string> skills);

  NodeSet keys_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::string>> skills_;
  std::vector<std::vector<Loop>> loops_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, NodeId> by_label_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> edge_index_;
};

struct Requirement {
  std::string skill;
  int count = 0;

  friend bool operator==(const Requirement&, const Requirement&) = default;
};

// Requirements {<a_j, k_j>}: at least k_j members holding skill a_j.
class Task {
 public:
  Task() = default;
  Task(std::initializer_list<Requirement> reqs);

  void add(std::string skill, int count);
  const std::vector<Requirement>& requirements() const { return reqs_; }
  std::size_t size() const { return reqs_.size(); }
  bool empty() const { return reqs_.empty(); }
  // Sum of all counts.
  int total_count() const;
  bool mentions(std::string_view skill) const;

  friend bool operator==(const Task&, const Task&) = default;

 private:
  std::vector<Requirement> reqs_;
};

// A vertex subset with statistics recomputed on the induced subgraph of the
// graph it was drawn from.
struct Team {
  NodeSet members;
  Weight total_weight;
  Rational density;
  Weight diameter;  // infinite iff components > 1
  int components = 0;

  std::size_t size() const { return members.size(); }
};

Team make_team(const SkillGraph& source, const NodeSet& members);

SkillGraph induced_subgraph(const SkillGraph& g, const NodeSet& members);

Rational density(const SkillGraph& g);

std::map<NodeId, Weight> shortest_distances(const SkillGraph& g, NodeId source);

// Largest shortest-path distance within g itself. 0 for a singleton.
Weight diameter(const SkillGraph& g);

// Components ordered by smallest key.
std::vector<NodeSet> connected_components(const SkillGraph& g);
bool is_connected(const SkillGraph& g);

Weight weighted_degree(const SkillGraph& g, NodeId v);

std::size_t skill_count(const SkillGraph& g, const NodeSet& members, std::string_view skill);
bool satisfies(const SkillGraph& g, const NodeSet& members, const Task& task);
// Throws InfeasibleError naming the first requirement g cannot cover.
void require_feasible(const SkillGraph& g, const Task& task);

namespace detail {

// Single-source shortest paths over positions; dist/pred indexed by position.
// pred[source] and pred of unreachable nodes are SIZE_MAX.
void dijkstra(const SkillGraph& g, std::size_t source, std::vector<Weight>& dist,
              std::vector<std::size_t>& pred);

}  // namespace detail

}  // namespace teamform

#endif  // TEAMFORM_GRAPH_HPP_
