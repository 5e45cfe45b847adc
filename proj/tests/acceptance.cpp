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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or fails only where listed in
// kKnownFailures; a known failure that starts passing is reported too.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "teamform/densest.hpp"
#include "teamform/diameter.hpp"
#include "teamform/errors.hpp"
#include "teamform/evaluation.hpp"
#include "teamform/heuristics.hpp"
#include "teamform/io.hpp"
#include "teamform/oracle.hpp"
#include "teamform/reduction.hpp"

namespace tf = teamform;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t g_union_violations = 0;
std::size_t g_union_runs = 0;

tf::CertifyReport certify(tf::CertificateKind kind, std::size_t count, std::uint64_t seed, std::size_t max_nodes,
                          int max_k, std::size_t min_req, std::size_t max_req) {
  tf::CertifyConfig config;
  config.kind = kind;
  config.count = count;
  config.seed = seed;
  config.instances.min_nodes = 4;
  config.instances.max_nodes = max_nodes;
  config.instances.max_k = max_k;
  config.instances.min_requirements = min_req;
  config.instances.max_requirements = max_req;
  tf::CertifyReport report = tf::certify_ratios(config);
  if (kind != tf::CertificateKind::kExactness && kind != tf::CertificateKind::kDiameter) {
    g_union_violations += report.union_violations;
    g_union_runs += report.rows.size();
  }
  return report;
}

std::string ratio_summary(const tf::CertifyReport& r, double secs) {
  std::ostringstream out;
  out << r.rows.size() << " instances, " << r.violations << " violations, min ratio " << r.min_ratio
      << ", max ratio " << r.max_ratio << ", " << secs << " s";
  return out.str();
}

Verdict exactness() {
  auto start = Clock::now();
  auto r = certify(tf::CertificateKind::kExactness, 300, 1000, 14, 4, 1, 1);
  double secs = seconds_since(start);
  return {r.violations == 0 && r.rows.size() == 300 && secs < 60, ratio_summary(r, secs)};
}

Verdict single_skill_bound() {
  auto start = Clock::now();
  auto r = certify(tf::CertificateKind::kDensitySingle, 500, 2000, 12, 4, 1, 1);
  double secs = seconds_since(start);
  return {r.violations == 0 && r.rows.size() == 500 && secs < 300, ratio_summary(r, secs)};
}

Verdict one_skill_per_node_bound() {
  auto start = Clock::now();
  auto r = certify(tf::CertificateKind::kDensityOneSkill, 200, 3000, 12, 4, 2, 3);
  return {r.violations == 0 && r.rows.size() == 200, ratio_summary(r, seconds_since(start))};
}

Verdict diameter_bound() {
  auto start = Clock::now();
  auto r = certify(tf::CertificateKind::kDiameter, 300, 4000, 12, 4, 1, 3);
  return {r.violations == 0 && r.rows.size() == 300, ratio_summary(r, seconds_since(start))};
}

Verdict reduction_equivalence() {
  auto suite = tf::reduction_fixture_suite();
  std::size_t small = 0, mismatches = 0, gadget_failures = 0;
  bool has_all_patterns = false;
  for (const auto& inst : suite) {
    if (inst.num_vars <= 3 && inst.clauses.size() <= 3) ++small;
    if (inst.num_vars == 3 && inst.clauses.size() == 8) has_all_patterns = true;
    tf::ReductionVerdict v = tf::verify_reduction(inst);
    if (v.sat != v.team_exists) ++mismatches;
    tf::GadgetFacts facts = tf::check_gadget_facts(inst);
    if (!facts.literal_pairs_far || !facts.clause_biconditional) ++gadget_failures;
  }
  std::ostringstream d;
  d << suite.size() << " formulas (" << small << " with N<=3, M<=3, all-sign-patterns set "
    << (has_all_patterns ? "included" : "missing") << "), " << mismatches << " sat/team mismatches, "
    << gadget_failures << " gadget fact failures";
  return {small >= 30 && has_all_patterns && mismatches == 0 && gadget_failures == 0, d.str()};
}

Verdict heuristic_guarantees() {
  tf::InstanceConfig config;
  config.max_nodes = 12;
  config.edge_probability = 0.45;
  config.max_requirements = 3;
  std::size_t successes = 0, bad_teams = 0, triples = 0, bad_order = 0;
  for (std::uint64_t seed = 5000; seed < 5200; ++seed) {
    tf::Instance inst = tf::generate_instance(config, seed);
    auto attempt = [&](auto fn) -> std::optional<tf::HeuristicOutcome> {
      try {
        return fn(inst.graph, inst.task);
      } catch (const tf::HeuristicFailure&) {
        return std::nullopt;
      }
    };
    auto e = attempt(tf::enhanced_dense);
    auto p = attempt(tf::partial_trimmed_dense);
    auto c = attempt(tf::complete_trimmed_dense);
    for (const auto* o : {&e, &p, &c}) {
      if (!*o) continue;
      ++successes;
      const tf::Team& t = (*o)->team;
      if (t.components != 1 || !tf::satisfies(inst.graph, t.members, inst.task)) ++bad_teams;
    }
    if (e && p && c) {
      ++triples;
      if (!(c->team.size() <= p->team.size() && p->team.size() <= e->team.size())) ++bad_order;
    }
    g_union_violations += tf::densest_alk(inst.graph, inst.task).trace.union_violations();
    ++g_union_runs;
  }
  std::ostringstream d;
  d << "200 instances, " << successes << " successful teams (" << bad_teams << " disconnected or short), "
    << triples << " complete triples (" << bad_order << " out of size order)";
  return {bad_teams == 0 && bad_order == 0 && triples > 0, d.str()};
}

Verdict union_invariant() {
  std::ostringstream d;
  d << g_union_runs << " solver runs checked inline, " << g_union_violations << " violations";
  return {g_union_violations == 0 && g_union_runs > 0, d.str()};
}

Verdict monotonicity() {
  tf::InstanceConfig config;
  config.min_nodes = 2;
  config.max_nodes = 14;
  config.edge_probability = 0.5;
  std::mt19937_64 rng(6000);
  std::size_t perturbations = 0, wrong_delta = 0, wrong_sign = 0;
  for (std::uint64_t seed = 6000; perturbations < 1000; ++seed) {
    tf::SkillGraph g = tf::generate_instance(config, seed).graph;
    const tf::Rational n(static_cast<std::int64_t>(g.size()));
    const tf::Rational before = tf::density(g);
    std::vector<std::pair<tf::NodeId, tf::NodeId>> absent;
    for (tf::NodeId u : g.nodes()) {
      for (tf::NodeId v : g.nodes()) {
        if (u < v && !g.find_edge(u, v)) absent.emplace_back(u, v);
      }
    }
    bool add = !absent.empty() && (g.edges().empty() || rng() % 2 == 0);
    if (add) {
      auto [u, v] = absent[rng() % absent.size()];
      tf::Weight w = tf::Weight::from_micros(1 + static_cast<std::int64_t>(rng() % 5'000'000));
      g.add_edge(u, v, w);
      tf::Rational after = tf::density(g);
      if (after - before != w.to_rational() / n) ++wrong_delta;
      if (!(after > before)) ++wrong_sign;
    } else if (!g.edges().empty()) {
      tf::Edge e = g.edges()[rng() % g.edges().size()];
      g.remove_edge(e.u, e.v);
      tf::Rational after = tf::density(g);
      if (before - after != e.affinity.to_rational() / n) ++wrong_delta;
      if (!(after < before)) ++wrong_sign;
    } else {
      continue;
    }
    ++perturbations;
  }

  tf::SkillGraph square = tf::load_graph(
      "node 1\nnode 2\nnode 3\nnode 4\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 1 4 1\n");
  tf::Weight d0 = tf::diameter(square);
  square.add_edge(square.at("1"), square.at("3"), tf::Weight::from_int(1));
  bool witness = tf::diameter(square) == d0;

  std::ostringstream d;
  d << perturbations << " perturbations, " << wrong_delta << " wrong deltas, " << wrong_sign
    << " wrong signs; 4-cycle chord witness diameter " << d0.str() << " -> " << tf::diameter(square).str();
  return {perturbations >= 1000 && wrong_delta == 0 && wrong_sign == 0 && witness, d.str()};
}

Verdict metrics_fixture() {
  tf::PublicationCorpus corpus = tf::parse_corpus("pub P1 T 1 2\npub P2 AI 1 3 4\n");
  tf::AuthorSet team = tf::make_author_set({"1", "2", "3"});
  auto pubs = tf::team_pubs(team, corpus);
  auto partial = tf::partial_team_pubs(team, corpus);
  tf::Rational ratio = tf::team_pub_ratio(team, corpus);
  tf::Rational rank = tf::team_rank({"A", "B"}, tf::parse_ranks("rank A 2\nrank B 4\n"), {"A", "B"});
  std::ostringstream d;
  d << "teamPubs " << pubs << ", partialTeamPubs " << partial << ", teamPubRatio " << ratio << ", team_rank "
    << rank;
  return {pubs == 1 && partial == 2 && ratio == tf::Rational(7, 12) && rank == tf::Rational(375), d.str()};
}

Verdict desk_scale() {
  tf::PublicationCorpus corpus = tf::synthesize_corpus(tf::SyntheticCorpusConfig{}, 0);
  tf::SkillGraph g = tf::build_coauthor_graph(corpus);
  auto path = std::filesystem::temp_directory_path() / "teamform_acceptance_corpus.graph";
  std::ofstream(path) << tf::serialize_graph(g);

  std::ostringstream out, err;
  int code = tf::cli::run_cli({"bench", "--graph", path.string(), "--skills", "T,AI,DB,DM", "--k-range", "3,5,7",
                               "--algos", "sdensest,enhanced,partialtrim,completetrim"},
                              out, err);
  if (code != 0) return {false, "bench exited with " + std::to_string(code) + ": " + err.str()};

  struct Cell {
    double density = 0, per_node = 0;
    std::size_t size = 0;
    bool ok = false;
  };
  std::map<std::pair<std::string, std::string>, std::map<std::string, Cell>> cells;
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    auto f = tf::detail::split(line, ',');
    Cell c;
    c.ok = f[3] == "ok";
    if (c.ok) {
      c.density = std::stod(f[4]);
      c.size = std::stoul(f[5]);
      c.per_node = std::stod(f[7]);
    }
    cells[{f[0], f[1]}][f[2]] = c;
  }

  std::size_t total = 0, density_ok = 0, size_ok = 0, per_node_max = 0, skipped = 0;
  for (const auto& [key, algos] : cells) {
    bool all_ok = true;
    for (const auto& [name, c] : algos) all_ok = all_ok && c.ok;
    if (!all_ok) {
      ++skipped;
      continue;
    }
    ++total;
    const Cell& s = algos.at("sdensest");
    const Cell& c = algos.at("completetrim");
    if (s.density + 1e-9 >= c.density) ++density_ok;
    if (c.size <= s.size) ++size_ok;
    bool best = true;
    for (const auto& [name, other] : algos) best = best && c.per_node + 1e-9 >= other.per_node;
    if (best) ++per_node_max;
  }
  double share = total ? static_cast<double>(per_node_max) / static_cast<double>(total) : 0;
  std::ostringstream d;
  d << g.size() << "-author graph, " << total << " cells (" << skipped << " infeasible); density order " << density_ok
    << "/" << total << ", size order " << size_ok << "/" << total << ", completetrim best density-per-node "
    << per_node_max << "/" << total << " = " << share << " (need >= 0.8)";
  return {total == 12 && density_ok == total && size_ok == total && share >= 0.8, d.str()};
}

// Criteria that fail on this build for reasons recorded by the maintainers.
const std::set<std::string> kKnownFailures{"desk-scale-orderings"};

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exactness", exactness},
      {"density-bound-single-skill", single_skill_bound},
      {"density-bound-one-skill-per-node", one_skill_per_node_bound},
      {"diameter-bound", diameter_bound},
      {"reduction-equivalence", reduction_equivalence},
      {"heuristic-guarantees", heuristic_guarantees},
      {"union-invariant", union_invariant},
      {"monotonicity-sensitivity", monotonicity},
      {"metrics-fixture", metrics_fixture},
      {"desk-scale-orderings", desk_scale},
  };
  int passed = 0, unexpected = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    bool known = kKnownFailures.count(name) > 0;
    if (v.pass) ++passed;
    if (!v.pass && !known) ++unexpected;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail;
    if (!v.pass && known) std::cout << " [known failure]";
    if (v.pass && known) std::cout << " [known failure now passes]";
    std::cout << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed, " << unexpected << " unexpected failures"
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
