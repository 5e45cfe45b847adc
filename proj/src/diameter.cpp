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

#include "teamform/diameter.hpp"

#include <algorithm>

#include "teamform/errors.hpp"

namespace teamform {

DistanceIndex::DistanceIndex(const SkillGraph& host)
    : host_(&host), n_(host.size()), dist_(n_ * n_), pred_(n_ * n_) {
  std::vector<Weight> dist;
  std::vector<std::size_t> pred;
  for (std::size_t s = 0; s < n_; ++s) {
    detail::dijkstra(host, s, dist, pred);
    std::copy(dist.begin(), dist.end(), dist_.begin() + s * n_);
    std::copy(pred.begin(), pred.end(), pred_.begin() + s * n_);
  }
}

Weight DistanceIndex::distance(NodeId from, NodeId to) const {
  return dist_[host_->position(from) * n_ + host_->position(to)];
}

std::vector<NodeId> DistanceIndex::path(NodeId from, NodeId to) const {
  std::size_t s = host_->position(from);
  std::size_t t = host_->position(to);
  if (dist_[s * n_ + t].is_infinite()) return {};
  std::vector<NodeId> out;
  for (std::size_t v = t; v != s; v = pred_[s * n_ + v]) out.push_back(host_->nodes()[v]);
  out.push_back(from);
  std::reverse(out.begin(), out.end());
  return out;
}

Weight DistanceIndex::spread(const NodeSet& members) const {
  Weight best;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      best = std::max(best, distance(members[i], members[j]));
    }
  }
  return best;
}

namespace {

// Support nodes ordered by (distance from pivot, key).
std::vector<std::pair<Weight, NodeId>> nearest(NodeId pivot, const NodeSet& support, const DistanceIndex& idx) {
  std::vector<std::pair<Weight, NodeId>> order;
  order.reserve(support.size());
  for (NodeId s : support) order.emplace_back(idx.distance(pivot, s), s);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

Weight d_k(NodeId pivot, const NodeSet& support, int k, const DistanceIndex& idx) {
  if (k < 1) throw DomainError("d_k requires k >= 1");
  if (static_cast<std::size_t>(k) > support.size()) {
    throw InfeasibleError("", "d_k: k exceeds the support size");
  }
  return nearest(pivot, support, idx)[k - 1].first;
}

NodeSet path_k(NodeId pivot, const NodeSet& support, int k, const DistanceIndex& idx) {
  if (k < 1) throw DomainError("path_k requires k >= 1");
  if (static_cast<std::size_t>(k) > support.size()) {
    throw InfeasibleError("", "path_k: k exceeds the support size");
  }
  auto order = nearest(pivot, support, idx);
  if (order[k - 1].first.is_infinite()) throw InfeasibleError("", "path_k: quota unreachable from pivot");
  std::vector<NodeId> nodes{pivot};
  for (int i = 0; i < k; ++i) {
    auto p = idx.path(pivot, order[i].second);
    nodes.insert(nodes.end(), p.begin(), p.end());
  }
  return make_node_set(std::move(nodes));
}

DiameterOutcome min_diameter(const SkillGraph& g, const Task& task) {
  DistanceIndex idx(g);
  return min_diameter(idx, task);
}

DiameterOutcome min_diameter(const DistanceIndex& idx, const Task& task) {
  const SkillGraph& g = idx.host();
  require_feasible(g, task);
  DiameterOutcome out;

  std::vector<std::pair<const Requirement*, NodeSet>> active;
  for (const auto& req : task.requirements()) {
    if (req.count > 0) active.emplace_back(&req, g.support(req.skill));
  }
  if (active.empty()) return out;

  std::size_t rare = 0;
  for (std::size_t i = 1; i < active.size(); ++i) {
    if (active[i].second.size() < active[rare].second.size()) rare = i;
  }
  PivotReport& report = out.report;
  report.rare_skill = active[rare].first->skill;

  std::size_t best = SIZE_MAX;
  for (NodeId pivot : active[rare].second) {
    PivotRadii radii{pivot, {}, Weight()};
    for (const auto& [req, support] : active) {
      Weight r = d_k(pivot, support, req->count, idx);
      radii.per_skill.emplace_back(req->skill, r);
      radii.radius = std::max(radii.radius, r);
    }
    report.per_pivot.push_back(std::move(radii));
    if (best == SIZE_MAX || report.per_pivot.back().radius < report.per_pivot[best].radius) {
      best = report.per_pivot.size() - 1;
    }
  }
  if (report.per_pivot[best].radius.is_infinite()) {
    throw InfeasibleError(report.rare_skill, "infeasible: no pivot with skill " + report.rare_skill +
                                                 " reaches every requirement");
  }
  report.chosen = report.per_pivot[best].pivot;

  NodeSet members{report.chosen};
  for (const auto& [req, support] : active) {
    members = set_union(members, path_k(report.chosen, support, req->count, idx));
  }
  out.team = make_team(g, members);
  out.host_diameter = idx.spread(members);
  return out;
}

void write_pivot_report(std::ostream& out, const PivotReport& report, const SkillGraph& g) {
  out << "rare_skill " << report.rare_skill << '\n';
  for (const auto& p : report.per_pivot) out << "pivot " << g.label(p.pivot) << " R=" << p.radius << '\n';
  if (report.chosen >= 0) out << "chosen " << g.label(report.chosen) << '\n';
}

}  // namespace teamform
