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

#include "teamform/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "teamform/densest.hpp"
#include "teamform/diameter.hpp"
#include "teamform/errors.hpp"

namespace teamform {
namespace {

using Mask = std::uint32_t;
using Wide = __int128;

void guard(const SkillGraph& g) {
  if (g.size() > kMaxOracleNodes) {
    throw GuardRefusal("exhaustive search refused: " + std::to_string(g.size()) + " nodes exceeds " +
                       std::to_string(kMaxOracleNodes));
  }
}

NodeSet mask_members(const SkillGraph& g, Mask mask) {
  NodeSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mask >> i & 1u) out.push_back(g.nodes()[i]);
  }
  return out;
}

// W(S) in micro-units for every subset S, built from the lowest set bit.
std::vector<std::int64_t> subset_weights(const SkillGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> loop(n, 0);
  for (const Edge& e : g.edges()) {
    std::size_t a = g.position(e.u);
    std::size_t b = g.position(e.v);
    w[a][b] = w[b][a] = e.affinity.micros();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const Loop& l : g.loops(g.nodes()[i])) loop[i] += l.weight.micros();
  }
  std::vector<std::int64_t> out(std::size_t{1} << n, 0);
  for (Mask mask = 1; mask < out.size(); ++mask) {
    unsigned low = static_cast<unsigned>(std::countr_zero(mask));
    Mask rest = mask & (mask - 1);
    std::int64_t add = loop[low];
    for (Mask r = rest; r; r &= r - 1) add += w[low][static_cast<unsigned>(std::countr_zero(r))];
    out[mask] = out[rest] + add;
  }
  return out;
}

struct Quota {
  Mask support;
  int count;
};

std::vector<Quota> quotas(const SkillGraph& g, const Task& task) {
  std::vector<Quota> out;
  for (const auto& req : task.requirements()) {
    Mask m = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.has_skill(g.nodes()[i], req.skill)) m |= Mask{1} << i;
    }
    out.push_back({m, req.count});
  }
  return out;
}

bool meets(Mask mask, const std::vector<Quota>& qs) {
  return std::all_of(qs.begin(), qs.end(),
                     [&](const Quota& q) { return std::popcount(mask & q.support) >= q.count; });
}

// Visits non-empty subsets (or all subsets when include_empty) ordered by
// size, then numerically.
template <typename F>
void for_each_subset(std::size_t n, bool include_empty, F&& f) {
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t size = include_empty ? 0 : 1; size <= n; ++size) {
    if (size == 0) {
      f(Mask{0});
      continue;
    }
    // Gosper's hack over masks of fixed popcount.
    Mask m = (Mask{1} << size) - 1;
    while (m <= full) {
      f(m);
      Mask c = m & (~m + 1);
      Mask r = m + c;
      if (r == 0 || r > full) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

OptimalSolution best_density(const SkillGraph& g, const std::vector<Quota>& qs, bool include_empty) {
  guard(g);
  auto weights = subset_weights(g);
  OptimalSolution best;
  bool found = false;
  Mask best_mask = 0;
  for_each_subset(g.size(), include_empty, [&](Mask mask) {
    if (!meets(mask, qs)) return;
    ++best.enumerated;
    if (mask == 0) {
      if (!found) {
        found = true;
        best_mask = 0;
      }
      return;
    }
    if (!found || best_mask == 0 ||
        Wide(weights[mask]) * std::popcount(best_mask) > Wide(weights[best_mask]) * std::popcount(mask)) {
      found = true;
      best_mask = mask;
    }
  });
  if (!found) throw InfeasibleError("", "infeasible: no subset satisfies the task");
  best.members = mask_members(g, best_mask);
  if (best_mask != 0) {
    best.objective = Rational(weights[best_mask], Weight::kScale) / Rational(std::popcount(best_mask));
  }
  return best;
}

// Pairwise distances in micro-units (INT64_MAX for unreachable) over the
// subgraph induced by `mask`, by Floyd-Warshall.
std::int64_t induced_spread(const std::vector<std::int64_t>& edge, std::size_t n, Mask mask) {
  constexpr std::int64_t kInf = INT64_MAX;
  std::vector<unsigned> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) idx.push_back(static_cast<unsigned>(i));
  }
  const std::size_t m = idx.size();
  std::vector<std::int64_t> d(m * m, kInf);
  for (std::size_t a = 0; a < m; ++a) {
    d[a * m + a] = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) d[a * m + b] = edge[idx[a] * n + idx[b]];
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      if (d[a * m + k] == kInf) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (d[k * m + b] == kInf) continue;
        d[a * m + b] = std::min(d[a * m + b], d[a * m + k] + d[k * m + b]);
      }
    }
  }
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

OptimalSolution brute_densest_subgraph(const SkillGraph& g) {
  if (g.empty()) throw DomainError("brute_densest_subgraph of an empty graph");
  return best_density(g, {}, false);
}

OptimalSolution brute_density_tf(const SkillGraph& g, const Task& task) {
  require_feasible(g, task);
  return best_density(g, quotas(g, task), true);
}

OptimalSolution brute_diameter_tf(const SkillGraph& g, const Task& task, Metric metric) {
  require_feasible(g, task);
  guard(g);
  constexpr std::int64_t kInf = INT64_MAX;
  const std::size_t n = g.size();
  auto qs = quotas(g, task);

  std::vector<std::int64_t> host(n * n, kInf);
  std::vector<std::int64_t> edge(n * n, kInf);
  {
    DistanceIndex idx(g);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Weight d = idx.distance(g.nodes()[a], g.nodes()[b]);
        host[a * n + b] = d.is_infinite() ? kInf : d.micros();
      }
    }
    for (const Edge& e : g.edges()) {
      std::size_t a = g.position(e.u);
      std::size_t b = g.position(e.v);
      edge[a * n + b] = edge[b * n + a] = e.distance.micros();
    }
  }

  OptimalSolution best;
  bool found = false;
  std::int64_t best_value = kInf;
  Mask best_mask = 0;
  for_each_subset(n, true, [&](Mask mask) {
    if (!meets(mask, qs)) return;
    ++best.enumerated;
    std::int64_t value = 0;
    if (metric == Metric::kHost) {
      for (Mask a = mask; a; a &= a - 1) {
        unsigned i = static_cast<unsigned>(std::countr_zero(a));
        for (Mask b = a & (a - 1); b; b &= b - 1) {
          value = std::max(value, host[i * n + static_cast<unsigned>(std::countr_zero(b))]);
        }
      }
    } else if (mask != 0) {
      value = induced_spread(edge, n, mask);
    }
    if (!found || value < best_value) {
      found = true;
      best_value = value;
      best_mask = mask;
    }
  });
  best.members = mask_members(g, best_mask);
  if (best_value == kInf) {
    best.infinite = true;
  } else {
    best.objective = Rational(best_value, Weight::kScale);
  }
  return best;
}

DalksInstance as_dalks_instance(const SkillGraph& g, int k, const std::string& skill) {
  DalksInstance out;
  for (NodeId id : g.nodes()) out.graph.add_node_with_key(id, g.label(id), {skill});
  for (const Edge& e : g.edges()) out.graph.add_edge(e.u, e.v, e.affinity, e.distance);
  for (NodeId id : g.nodes()) {
    for (const Loop& l : g.loops(id)) out.graph.add_loop(id, l.weight, l.partner);
  }
  out.task.add(skill, k);
  return out;
}

Instance generate_instance(const InstanceConfig& config, std::uint64_t seed) {
  if (config.min_nodes < 1 || config.min_nodes > config.max_nodes) throw DomainError("bad node range");
  if (config.skills.empty()) throw DomainError("instance generator needs at least one skill");
  if (config.min_requirements > config.max_requirements || config.max_requirements > config.skills.size()) {
    throw DomainError("bad requirement range");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution edge_coin(config.edge_probability);
  std::bernoulli_distribution skill_coin(config.skill_probability);

  const std::size_t n = uniform(config.min_nodes, config.max_nodes);
  const std::size_t reqs = std::min(uniform(config.min_requirements, config.max_requirements), n);
  std::vector<std::string> chosen = config.skills;
  std::shuffle(chosen.begin(), chosen.end(), rng);
  chosen.resize(reqs);

  std::vector<std::vector<std::string>> skills(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (config.one_skill_per_node) {
      if (skill_coin(rng)) skills[i].push_back(config.skills[uniform(0, config.skills.size() - 1)]);
    } else {
      for (const auto& s : config.skills) {
        if (skill_coin(rng)) skills[i].push_back(s);
      }
    }
  }
  // Node j is guaranteed to hold the j-th required skill.
  for (std::size_t j = 0; j < reqs; ++j) {
    if (config.one_skill_per_node) {
      skills[j] = {chosen[j]};
    } else if (std::find(skills[j].begin(), skills[j].end(), chosen[j]) == skills[j].end()) {
      skills[j].push_back(chosen[j]);
    }
  }

  Instance out;
  for (std::size_t i = 0; i < n; ++i) out.graph.add_node(std::to_string(i + 1), skills[i]);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!edge_coin(rng)) continue;
      auto affinity = Weight::from_int(static_cast<std::int64_t>(uniform(1, config.max_affinity)));
      Weight distance = config.independent_distance
                            ? Weight::from_int(static_cast<std::int64_t>(uniform(1, config.max_affinity)))
                            : affinity;
      out.graph.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b), affinity, distance);
    }
  }
  for (const auto& s : chosen) {
    std::size_t support = out.graph.support(s).size();
    int k = static_cast<int>(uniform(1, std::min<std::size_t>(static_cast<std::size_t>(config.max_k), support)));
    out.task.add(s, k);
  }
  return out;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kDensitySingle: return "density-single";
    case CertificateKind::kDensityOneSkill: return "density-one-skill";
    case CertificateKind::kDensityGeneral: return "density-general";
    case CertificateKind::kDiameter: return "diameter";
    case CertificateKind::kExactness: return "exactness";
  }
  return "unknown";
}

CertifyReport certify_ratios(const CertifyConfig& config) {
  if (config.instances.max_nodes > kMaxOracleNodes) {
    throw GuardRefusal("max nodes " + std::to_string(config.instances.max_nodes) + " exceeds the oracle guard of " +
                       std::to_string(kMaxOracleNodes));
  }
  InstanceConfig inst_config = config.instances;
  if (config.kind == CertificateKind::kDensitySingle || config.kind == CertificateKind::kExactness) {
    inst_config.min_requirements = inst_config.max_requirements = 1;
  }
  if (config.kind == CertificateKind::kDensityOneSkill) inst_config.one_skill_per_node = true;

  CertifyReport report;
  report.kind = config.kind;
  double sum = 0;
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + i;
    Instance inst = generate_instance(inst_config, seed);
    CertifyRow row{seed, inst.graph.size(), Rational(1), true, 0};
    switch (config.kind) {
      case CertificateKind::kExactness: {
        DensestSubgraph fast = max_density_subgraph(inst.graph);
        OptimalSolution slow = brute_densest_subgraph(inst.graph);
        if (slow.objective != Rational(0)) row.ratio = fast.density / slow.objective;
        row.pass = fast.density == slow.objective;
        break;
      }
      case CertificateKind::kDensitySingle:
      case CertificateKind::kDensityOneSkill:
      case CertificateKind::kDensityGeneral: {
        DensestOutcome got = config.kind == CertificateKind::kDensitySingle ? s_densest_alk(inst.graph, inst.task)
                                                                             : m_densest_alk(inst.graph, inst.task);
        OptimalSolution opt = brute_density_tf(inst.graph, inst.task);
        row.union_violations = got.trace.union_violations();
        if (opt.objective != Rational(0)) row.ratio = got.team.density / opt.objective;
        bool feasible = satisfies(inst.graph, got.team.members, inst.task);
        bool bound = config.kind == CertificateKind::kDensityGeneral ||
                     got.team.density * Rational(3) >= opt.objective;
        row.pass = feasible && bound && row.union_violations == 0;
        break;
      }
      case CertificateKind::kDiameter: {
        OptimalSolution opt = brute_diameter_tf(inst.graph, inst.task, Metric::kHost);
        try {
          DiameterOutcome got = min_diameter(inst.graph, inst.task);
          bool feasible = satisfies(inst.graph, got.team.members, inst.task);
          if (opt.infinite) {
            row.pass = false;
          } else {
            Rational achieved = got.host_diameter.to_rational();
            if (opt.objective != Rational(0)) {
              row.ratio = achieved / opt.objective;
            } else if (achieved != Rational(0)) {
              row.ratio = Rational(INT64_MAX);
            }
            row.pass = feasible && achieved <= opt.objective * Rational(2);
          }
        } catch (const InfeasibleError&) {
          row.pass = opt.infinite;
        }
        break;
      }
    }
    if (!row.pass) ++report.violations;
    report.union_violations += row.union_violations;
    if (report.rows.empty() || row.ratio < report.min_ratio) report.min_ratio = row.ratio;
    if (report.rows.empty() || row.ratio > report.max_ratio) report.max_ratio = row.ratio;
    sum += row.ratio.to_double();
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) report.mean_ratio = sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace teamform
