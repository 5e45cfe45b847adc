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

// Exhaustive solvers for small instances, a seeded instance generator, and
// the approximation-ratio certification harness built from them.

#ifndef TEAMFORM_ORACLE_HPP_
#define TEAMFORM_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

inline constexpr std::size_t kMaxOracleNodes = 20;

struct OptimalSolution {
  NodeSet members;
  Rational objective;     // density, or diameter when !infinite
  bool infinite = false;  // every feasible set is disconnected (diameter only)
  std::size_t enumerated = 0;
};

// Subsets are visited by increasing size, then by increasing bitmask, and
// the first optimum found is kept.
OptimalSolution brute_densest_subgraph(const SkillGraph& g);
OptimalSolution brute_density_tf(const SkillGraph& g, const Task& task);

enum class Metric { kHost, kInduced };
OptimalSolution brute_diameter_tf(const SkillGraph& g, const Task& task, Metric metric);

// Every node gets one shared skill and the task asks for k of it, turning
// team formation into the plain densest-at-least-k problem.
struct DalksInstance {
  SkillGraph graph;
  Task task;
};
DalksInstance as_dalks_instance(const SkillGraph& g, int k, const std::string& skill = "any");

struct InstanceConfig {
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 10;
  double edge_probability = 0.4;
  int max_affinity = 5;
  bool independent_distance = false;  // otherwise distance = affinity
  std::vector<std::string> skills{"a", "b", "c"};
  double skill_probability = 0.4;
  bool one_skill_per_node = false;
  std::size_t min_requirements = 1;
  std::size_t max_requirements = 1;
  int max_k = 4;
};

struct Instance {
  SkillGraph graph;
  Task task;
};

// Deterministic for a given (config, seed). The task is always feasible.
Instance generate_instance(const InstanceConfig& config, std::uint64_t seed);

enum class CertificateKind {
  kDensitySingle,    // s_densest_alk >= d*/3
  kDensityOneSkill,  // m_densest_alk >= d*/3, one skill per node
  kDensityGeneral,   // m_densest_alk, ratio recorded only
  kDiameter,         // min_diameter host spread <= 2 * optimum
  kExactness,        // max_density_subgraph == exhaustive optimum
};

std::string to_string(CertificateKind kind);

struct CertifyConfig {
  CertificateKind kind = CertificateKind::kDensitySingle;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  InstanceConfig instances;
};

struct CertifyRow {
  std::uint64_t seed;
  std::size_t nodes;
  Rational ratio;  // achieved / optimum for density, achieved / optimum for diameter
  bool pass;
  std::size_t union_violations = 0;
};

struct CertifyReport {
  CertificateKind kind;
  std::vector<CertifyRow> rows;
  std::size_t violations = 0;
  std::size_t union_violations = 0;
  Rational min_ratio;
  Rational max_ratio;
  double mean_ratio = 0;
};

// Throws GuardRefusal when max_nodes exceeds kMaxOracleNodes.
CertifyReport certify_ratios(const CertifyConfig& config);

}  // namespace teamform

#endif  // TEAMFORM_ORACLE_HPP_
