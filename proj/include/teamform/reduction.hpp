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

// 3-SAT to single-skill minimum-diameter team formation.
//
// For N variables and M clauses the gadget is a complete graph on 2N + 2M
// nodes, all holding skill "a":
//   u_i -- ~u_i                    r'
//   C_j1 -- C_j2                   r'
//   literal -- literal (other)     r
//   clause node -- clause node     r
//   C_jx -- literal of C_j         r/2
//   C_jx -- any other literal      r
// with r < r'. A team of N + 2M nodes with diameter at most r exists iff the
// formula is satisfiable.

#ifndef TEAMFORM_REDUCTION_HPP_
#define TEAMFORM_REDUCTION_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

// Literals are signed 1-based variable indices (DIMACS style).
struct SatInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  // Throws DomainError unless every clause has three distinct literals over
  // known variables and never pairs a variable with its negation.
  void validate() const;
  // Brute force over all 2^N assignments.
  bool satisfiable() const;
};

// "p <N> <M>" followed by M clause lines of three signed integers; a
// trailing DIMACS "0" on a clause line is accepted. '#' and 'c' lines are
// comments.
SatInstance parse_sat(std::string_view text);
std::string serialize_sat(const SatInstance& inst);

struct ReductionParams {
  Weight r = Weight::from_int(2);
  Weight r_prime = Weight::from_int(3);
};

struct ReductionInstance {
  SkillGraph graph;
  Task task;         // {a : N + 2M}
  Weight threshold;  // r
  int k_target = 0;
};

std::string literal_label(int literal);
std::string clause_label(std::size_t clause, int side);  // side 1 or 2

ReductionInstance sat_to_diameter_stf(const SatInstance& inst, const ReductionParams& params = {});

struct ReductionVerdict {
  bool sat = false;
  bool team_exists = false;
  bool structured_exists = false;  // over the 2^N literal-choice candidates
  bool swept = false;              // full subset sweep ran (2N + 2M <= 16)
};

inline constexpr int kMaxReductionVars = 4;
inline constexpr int kMaxReductionClauses = 8;

// Diameters are measured on the candidate's induced subgraph.
ReductionVerdict verify_reduction(const SatInstance& inst, const ReductionParams& params = {});

struct GadgetFacts {
  bool literal_pairs_far = true;     // host d(x, ~x) > r for every variable
  bool clause_biconditional = true;  // d_X(C_j1, C_j2) == r  iff  X meets C_j
};

// Checks both facts over every literal-choice candidate, with and without
// each clause's literals, on the generated gadget.
GadgetFacts check_gadget_facts(const SatInstance& inst, const ReductionParams& params = {});

// Deterministic fixture suite: every 3-variable formula with up to three
// clauses drawn from a fixed pool, the eight-clause all-sign-patterns
// formula, plus small unsatisfiable and degenerate cases.
std::vector<SatInstance> reduction_fixture_suite();

}  // namespace teamform

#endif  // TEAMFORM_REDUCTION_HPP_
