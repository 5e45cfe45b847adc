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

#include "teamform/densest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "teamform/errors.hpp"
#include "teamform/max_flow.hpp"

namespace teamform {
namespace {

using Wide = __int128;

std::int64_t checked(Wide v) {
  if (v < 0 || v > INT64_MAX) throw std::overflow_error("flow capacity overflow");
  return static_cast<std::int64_t>(v);
}

// Edge and loop weights of g in micro-units, indexed by position.
struct MicroGraph {
  struct Arc {
    std::size_t a, b;
    std::int64_t w;
  };
  std::vector<Arc> edges;
  std::vector<std::int64_t> loop;    // loop weight per node
  std::vector<std::int64_t> degree;  // incident edge weight per node

  explicit MicroGraph(const SkillGraph& g) : loop(g.size(), 0), degree(g.size(), 0) {
    for (const Edge& e : g.edges()) {
      std::size_t a = g.position(e.u);
      std::size_t b = g.position(e.v);
      std::int64_t w = e.affinity.micros();
      edges.push_back({a, b, w});
      degree[a] += w;
      degree[b] += w;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (const Loop& l : g.loops(g.nodes()[i])) loop[i] += l.weight.micros();
    }
  }

  std::int64_t weight_of(const std::vector<bool>& in) const {
    std::int64_t w = 0;
    for (const Arc& e : edges) {
      if (in[e.a] && in[e.b]) w += e.w;
    }
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (in[i]) w += loop[i];
    }
    return w;
  }
};

// Selects S maximizing q*W(S) - p*|S|. Cut(s + S) = n*m' - 2(q*W(S) - p*|S|).
std::vector<bool> best_response(const MicroGraph& mg, std::int64_t p, std::int64_t q) {
  const std::size_t n = mg.loop.size();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  Wide big = 0;
  for (std::size_t i = 0; i < n; ++i) {
    big = std::max(big, Wide(q) * (mg.degree[i] + 2 * Wide(mg.loop[i])));
  }
  checked(big * Wide(n + 1) + 2 * Wide(p) * Wide(n + 1));

  MaxFlow flow(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    flow.add_arc(source, i, checked(big));
    flow.add_arc(i, sink, checked(big + 2 * Wide(p) - Wide(q) * (mg.degree[i] + 2 * Wide(mg.loop[i]))));
  }
  for (const auto& e : mg.edges) flow.add_undirected(e.a, e.b, checked(Wide(q) * e.w));
  flow.solve(source, sink);
  std::vector<bool> side = flow.source_side(source);
  side.resize(n);
  return side;
}

NodeSet members_of(const SkillGraph& g, const std::vector<bool>& in) {
  NodeSet out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) out.push_back(g.nodes()[i]);
  }
  return out;
}

}  // namespace

DensestSubgraph max_density_subgraph(const SkillGraph& g) {
  if (g.empty()) throw DomainError("max_density_subgraph of an empty graph");
  MicroGraph mg(g);
  std::vector<bool> best(g.size(), true);
  std::int64_t p = mg.weight_of(best);
  std::int64_t q = static_cast<std::int64_t>(g.size());
  while (true) {
    std::int64_t d = std::gcd(p, q);
    if (d > 1) {
      p /= d;
      q /= d;
    }
    std::vector<bool> side = best_response(mg, p, q);
    std::int64_t count = std::count(side.begin(), side.end(), true);
    if (count == 0) break;
    std::int64_t w = mg.weight_of(side);
    if (Wide(q) * w - Wide(p) * count <= 0) break;
    best = std::move(side);
    p = w;
    q = count;
  }
  NodeSet members = members_of(g, best);
  std::int64_t w = mg.weight_of(best);
  return {members, Rational(w, Weight::kScale) / Rational(static_cast<std::int64_t>(members.size()))};
}

SkillGraph shrink(const SkillGraph& g, const NodeSet& h) {
  for (NodeId id : h) {
    if (!g.contains(id)) throw DomainError("shrink: node " + std::to_string(id) + " not in graph");
  }
  SkillGraph out;
  for (NodeId id : g.nodes()) {
    if (set_contains(h, id)) continue;
    out.add_node_with_key(id, g.label(id), g.skills(id));
    for (const Loop& l : g.loops(id)) out.add_loop(id, l.weight, l.partner);
  }
  for (const Edge& e : g.edges()) {
    bool in_u = set_contains(h, e.u);
    bool in_v = set_contains(h, e.v);
    if (!in_u && !in_v) {
      out.add_edge(e.u, e.v, e.affinity, e.distance);
    } else if (in_u != in_v) {
      NodeId survivor = in_u ? e.v : e.u;
      NodeId removed = in_u ? e.u : e.v;
      out.add_loop(survivor, e.affinity, removed);
    }
  }
  return out;
}

SkillGraph union_solution(const NodeSet& d_members, const NodeSet& h, const SkillGraph& original) {
  if (intersection_size(d_members, h) != 0) throw DomainError("union_solution: overlapping sets");
  return induced_subgraph(original, set_union(d_members, h));
}

SkillGraph absorb_peeled(const SkillGraph& solution, const SkillGraph& peeled, const SkillGraph& original) {
  if (intersection_size(solution.nodes(), peeled.nodes()) != 0) {
    throw DomainError("absorb_peeled: overlapping sets");
  }
  SkillGraph out;
  for (NodeId id : set_union(solution.nodes(), peeled.nodes())) {
    out.add_node_with_key(id, original.label(id), original.skills(id));
  }
  for (const SkillGraph* part : {&solution, &peeled}) {
    for (const Edge& e : part->edges()) out.add_edge(e.u, e.v, e.affinity, e.distance);
  }
  for (NodeId id : solution.nodes()) {
    for (const Loop& l : solution.loops(id)) out.add_loop(id, l.weight, l.partner);
  }
  for (NodeId id : peeled.nodes()) {
    for (const Loop& l : peeled.loops(id)) {
      if (l.partner && solution.contains(*l.partner)) {
        auto idx = original.find_edge(id, *l.partner);
        if (!idx) throw std::logic_error("loop without a matching original edge");
        const Edge& e = original.edges()[*idx];
        out.add_edge(e.u, e.v, e.affinity, e.distance);
      } else {
        out.add_loop(id, l.weight, l.partner);
      }
    }
  }
  return out;
}

NodeSet complete_skills(const NodeSet& d_members, const Task& task, const SkillGraph& g) {
  NodeSet current = d_members;
  for (const auto& req : task.requirements()) {
    std::size_t have = skill_count(g, current, req.skill);
    while (have < static_cast<std::size_t>(req.count)) {
      std::optional<NodeId> pick;
      Weight pick_affinity;
      for (NodeId cand : g.support(req.skill)) {
        if (set_contains(current, cand)) continue;
        Weight affinity;
        for (const auto& inc : g.incident(cand)) {
          if (set_contains(current, inc.neighbor)) affinity += g.edges()[inc.edge].affinity;
        }
        if (!pick || affinity > pick_affinity) {
          pick = cand;
          pick_affinity = affinity;
        }
      }
      if (!pick) {
        throw InfeasibleError(req.skill, "infeasible: not enough nodes with skill " + req.skill);
      }
      current.insert(std::upper_bound(current.begin(), current.end(), *pick), *pick);
      ++have;
    }
  }
  return current;
}

std::size_t SolverTrace::union_violations() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const PeelRound& r) { return !r.union_consistent; }));
}

DensestOutcome m_densest_alk(const SkillGraph& g, const Task& task) {
  require_feasible(g, task);
  DensestOutcome out;
  SolverTrace& trace = out.trace;

  NodeSet d_members;
  SkillGraph solution;
  SkillGraph residual = g;
  while (!satisfies(g, d_members, task)) {
    if (residual.empty()) {
      throw InfeasibleError(task.requirements().front().skill, "infeasible: residual graph exhausted");
    }
    DensestSubgraph h = max_density_subgraph(residual);
    SkillGraph peeled = induced_subgraph(residual, h.members);
    SkillGraph absorbed = absorb_peeled(solution, peeled, g);
    SkillGraph reference = union_solution(d_members, h.members, g);

    PeelRound round;
    round.h = h.members;
    round.h_density = h.density;
    round.union_consistent =
        absorbed.loop_count() == 0 && absorbed.total_weight() == reference.total_weight();
    d_members = set_union(d_members, h.members);
    residual = shrink(residual, h.members);
    solution = std::move(absorbed);

    round.d_members = d_members;
    round.d_density = density(reference);
    round.residual_nodes = residual.nodes();
    trace.rounds.push_back(std::move(round));
  }

  if (trace.rounds.empty()) return out;  // nothing to do: empty or zero-count task

  for (const PeelRound& round : trace.rounds) {
    trace.candidates.push_back(make_team(g, complete_skills(round.d_members, task, g)));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < trace.candidates.size(); ++i) {
    const Team& a = trace.candidates[i];
    const Team& b = trace.candidates[best];
    if (a.density != b.density) {
      if (a.density > b.density) best = i;
    } else if (a.size() != b.size()) {
      if (a.size() < b.size()) best = i;
    } else if (a.members < b.members) {
      best = i;
    }
  }
  trace.chosen = best;
  out.team = trace.candidates[best];
  return out;
}

DensestOutcome s_densest_alk(const SkillGraph& g, const Task& task) {
  if (task.size() != 1) throw DomainError("s_densest_alk expects exactly one requirement");
  return m_densest_alk(g, task);
}

DensestOutcome densest_alk(const SkillGraph& g, const Task& task) {
  return task.size() == 1 ? s_densest_alk(g, task) : m_densest_alk(g, task);
}

void write_trace(std::ostream& out, const SolverTrace& trace, const SkillGraph& g, const Task& task) {
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const PeelRound& r = trace.rounds[i];
    out << "round " << i + 1 << " h_size " << r.h.size() << " h_density " << r.h_density << " d_size "
        << r.d_members.size() << " skilled ";
    for (std::size_t j = 0; j < task.size(); ++j) {
      const auto& req = task.requirements()[j];
      out << (j ? "," : "") << req.skill << ':' << skill_count(g, r.d_members, req.skill);
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < trace.candidates.size(); ++i) {
    const Team& t = trace.candidates[i];
    out << "candidate " << i + 1 << " size " << t.size() << " density " << t.density
        << (i == trace.chosen ? " chosen" : "") << '\n';
  }
}

}  // namespace teamform
