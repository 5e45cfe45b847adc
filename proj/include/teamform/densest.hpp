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

// Density-objective team formation: an exact maximum-density-subgraph
// routine and the peel/shrink/union loop built on top of it.
//
// The loop repeatedly removes the densest subgraph H of the residual graph,
// folds the removed node's boundary edges into self-loops on the survivors,
// and accumulates the peeled nodes into the running solution D. Once D
// covers every requirement, each intermediate D is topped up with skilled
// nodes and the densest completion wins.

#ifndef TEAMFORM_DENSEST_HPP_
#define TEAMFORM_DENSEST_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "teamform/graph.hpp"
#include "teamform/numeric.hpp"

namespace teamform {

struct DensestSubgraph {
  NodeSet members;
  Rational density;
};

// Exact maximum-density subgraph, loops counted once at full weight.
// Dinkelbach iteration over a Goldberg min-cut network; every threshold is
// an exact rational. Among optimal sets the one returned is the minimal
// source side of the final cut.
DensestSubgraph max_density_subgraph(const SkillGraph& g);

// Removes h from g. Each surviving node keeps its loops and gains one loop
// per edge it had into h, carrying that edge's affinity.
SkillGraph shrink(const SkillGraph& g, const NodeSet& h);

// Induced subgraph of the original graph on d_members ∪ h.
SkillGraph union_solution(const NodeSet& d_members, const NodeSet& h, const SkillGraph& original);

// Loop-bookkeeping union: merges the running solution graph with the peeled
// subgraph (taken from the residual graph, loops included), turning every
// loop whose partner lies in the solution back into the original edge.
// Loops whose partner is absent stay as loops.
SkillGraph absorb_peeled(const SkillGraph& solution, const SkillGraph& peeled, const SkillGraph& original);

// Tops d_members up so that every requirement is met, visiting requirements
// in task order. Each added node is the not-yet-chosen holder of the skill
// with the largest total affinity to the current set; ties go to the
// smaller key.
NodeSet complete_skills(const NodeSet& d_members, const Task& task, const SkillGraph& g);

struct PeelRound {
  NodeSet h;
  NodeSet d_members;
  NodeSet residual_nodes;
  Rational h_density;
  Rational d_density;
  // W(D) from loop bookkeeping equals W(G[V(D)]) and no loop survived.
  bool union_consistent = true;
};

struct SolverTrace {
  std::vector<PeelRound> rounds;
  std::vector<Team> candidates;  // D'_i for i = 1..rounds
  std::size_t chosen = 0;        // index into candidates

  std::size_t union_violations() const;
};

struct DensestOutcome {
  Team team;
  SolverTrace trace;
};

// Single requirement <a, k>.
DensestOutcome s_densest_alk(const SkillGraph& g, const Task& task);
// Any number of requirements. An empty task yields the empty team.
DensestOutcome m_densest_alk(const SkillGraph& g, const Task& task);
// Picks s_densest_alk for one requirement and m_densest_alk otherwise.
DensestOutcome densest_alk(const SkillGraph& g, const Task& task);

// One line per round: index, |H|, density(H), |D|, then the per-requirement
// skilled counts of D.
void write_trace(std::ostream& out, const SolverTrace& trace, const SkillGraph& g, const Task& task);

}  // namespace teamform

#endif  // TEAMFORM_DENSEST_HPP_
