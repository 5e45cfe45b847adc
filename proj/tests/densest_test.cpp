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

#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "teamform/densest.hpp"
#include "teamform/errors.hpp"
#include "teamform/max_flow.hpp"
#include "teamform/oracle.hpp"

using namespace teamform;
using namespace teamform::testing;

TEST_CASE("max flow on a small network") {
  MaxFlow flow(4);
  flow.add_arc(0, 1, 3);
  flow.add_arc(0, 2, 2);
  flow.add_arc(1, 2, 1);
  flow.add_arc(1, 3, 2);
  flow.add_arc(2, 3, 3);
  CHECK(flow.solve(0, 3) == 5);
  auto side = flow.source_side(0);
  CHECK(side[0]);
  CHECK_FALSE(side[3]);
}

TEST_CASE("max_density_subgraph on the fixtures") {
  SkillGraph chain = f2();
  DensestSubgraph d = max_density_subgraph(chain);
  CHECK(d.members == chain.lookup({"1", "2"}));
  CHECK(d.density == Rational(5, 2));

  SkillGraph tri = f1();
  d = max_density_subgraph(tri);
  CHECK(d.members == tri.nodes());
  CHECK(d.density == Rational(1));

  SkillGraph looped = looped_pair();
  d = max_density_subgraph(looped);
  CHECK(d.members == looped.nodes());
  CHECK(d.density == Rational(3, 2));

  CHECK_THROWS_AS(max_density_subgraph(SkillGraph{}), DomainError);
}

TEST_CASE("max_density_subgraph agrees with exhaustive search") {
  InstanceConfig config;
  config.min_nodes = 1;
  config.max_nodes = 11;
  config.edge_probability = 0.45;
  for (std::uint64_t seed = 100; seed < 260; ++seed) {
    SkillGraph g = generate_instance(config, seed).graph;
    DensestSubgraph fast = max_density_subgraph(g);
    OptimalSolution slow = brute_densest_subgraph(g);
    INFO("seed " << seed);
    CHECK(fast.density == slow.objective);
    CHECK(density(induced_subgraph(g, fast.members)) == fast.density);
  }
}

TEST_CASE("max_density_subgraph counts loops") {
  SkillGraph g;
  g.add_node("x");
  g.add_node("y");
  g.add_node("z");
  g.add_edge(0, 1, w(1));
  g.add_loop(2, w(4));
  DensestSubgraph d = max_density_subgraph(g);
  CHECK(d.members == NodeSet{2});
  CHECK(d.density == Rational(4));
}

TEST_CASE("shrink folds boundary edges into loops") {
  SkillGraph chain = f2();
  SkillGraph s = shrink(chain, chain.lookup({"1", "2"}));
  CHECK(s.nodes() == chain.lookup({"3", "4"}));
  REQUIRE(s.edges().size() == 1);
  CHECK(s.edges()[0].affinity == w(2));
  REQUIRE(s.loops(chain.at("3")).size() == 1);
  CHECK(s.loops(chain.at("3"))[0].weight == w(1));
  CHECK(s.loops(chain.at("3"))[0].partner == chain.at("2"));
  CHECK(s.loops(chain.at("4")).empty());

  SkillGraph tri = f1();
  SkillGraph t = shrink(tri, tri.lookup({"1"}));
  CHECK(t.edges().size() == 1);
  CHECK(t.loops(tri.at("2")).size() == 1);
  CHECK(t.loops(tri.at("3")).size() == 1);
  CHECK(t.total_weight() == w(3));

  CHECK(shrink(chain, {}) == chain);
  CHECK_THROWS_AS(shrink(chain, {17}), DomainError);
}

TEST_CASE("union_solution is the induced subgraph of the union") {
  SkillGraph chain = f2();
  SkillGraph full = union_solution(chain.lookup({"1", "2"}), chain.lookup({"3", "4"}), chain);
  CHECK(full == chain);
  CHECK(full.total_weight() == w(8));
  CHECK(union_solution({}, chain.lookup({"1", "2"}), chain) == induced_subgraph(chain, chain.lookup({"1", "2"})));
  SkillGraph apart = union_solution(chain.lookup({"1"}), chain.lookup({"3"}), chain);
  CHECK(apart.size() == 2);
  CHECK(apart.edges().empty());
  CHECK_THROWS_AS(union_solution(chain.lookup({"1"}), chain.lookup({"1"}), chain), DomainError);
}

TEST_CASE("absorb_peeled restores edges from partner loops") {
  SkillGraph chain = f2();
  NodeSet first = chain.lookup({"1", "2"});
  SkillGraph residual = shrink(chain, first);
  SkillGraph solution = induced_subgraph(chain, first);
  SkillGraph merged = absorb_peeled(solution, residual, chain);
  CHECK(merged.total_weight() == union_solution(first, residual.nodes(), chain).total_weight());
  CHECK(merged.loop_count() == 0);
}

TEST_CASE("complete_skills") {
  SkillGraph chain = f2();
  CHECK(complete_skills(chain.lookup({"1", "2"}), Task{{"a", 2}}, chain) == chain.lookup({"1", "2", "3"}));
  SkillGraph tri = f1();
  CHECK(complete_skills(tri.nodes(), Task{{"a", 2}}, tri) == tri.nodes());
  CHECK(complete_skills({}, Task{{"b", 1}}, chain) == chain.lookup({"4"}));
  CHECK_THROWS_AS(complete_skills({}, Task{{"b", 2}}, chain), InfeasibleError);
}

TEST_CASE("s_densest_alk on the fixtures") {
  SkillGraph chain = f2();
  DensestOutcome out = s_densest_alk(chain, Task{{"a", 2}});
  CHECK(out.team.members == chain.lookup({"1", "2", "3"}));
  CHECK(out.team.density == Rational(2));
  REQUIRE(out.trace.candidates.size() == 2);
  CHECK(out.trace.candidates[0].density == Rational(2));
  CHECK(out.trace.candidates[1].members == chain.nodes());
  CHECK(out.trace.candidates[1].density == Rational(2));
  CHECK(out.trace.chosen == 0);
  CHECK(out.trace.union_violations() == 0);

  SkillGraph tri = f1();
  out = s_densest_alk(tri, Task{{"a", 3}});
  CHECK(out.team.members == tri.nodes());
  CHECK(out.team.density == Rational(1));
  CHECK(out.trace.rounds.size() == 1);

  out = s_densest_alk(tri, Task{{"a", 1}});
  CHECK(out.team.members == tri.nodes());
  CHECK(out.team.density == Rational(1));

  CHECK_THROWS_AS(s_densest_alk(tri, Task{{"a", 4}}), InfeasibleError);
  CHECK_THROWS_AS(s_densest_alk(tri, Task{{"a", 1}, {"b", 1}}), DomainError);
}

TEST_CASE("m_densest_alk on the fixtures") {
  SkillGraph chain = f2();
  DensestOutcome out = m_densest_alk(chain, Task{{"a", 2}, {"b", 1}});
  CHECK(out.team.members == chain.nodes());
  CHECK(out.team.density == Rational(2));

  out = m_densest_alk(chain, Task{});
  CHECK(out.team.members.empty());
  CHECK(out.team.density == Rational(0));
  CHECK(out.trace.rounds.empty());

  try {
    m_densest_alk(f1(), Task{{"a", 2}, {"b", 1}});
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.skill() == "b");
  }
}

TEST_CASE("densest_alk meets quotas and keeps the union invariant") {
  InstanceConfig config;
  config.max_nodes = 12;
  config.max_requirements = 3;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance inst = generate_instance(config, seed);
    DensestOutcome out = densest_alk(inst.graph, inst.task);
    INFO("seed " << seed);
    CHECK(satisfies(inst.graph, out.team.members, inst.task));
    CHECK(out.trace.union_violations() == 0);
    CHECK(out.team.density == density(induced_subgraph(inst.graph, out.team.members)));
    for (const Team& c : out.trace.candidates) CHECK(c.density <= out.team.density);
  }
}

TEST_CASE("write_trace lists rounds and candidates") {
  SkillGraph chain = f2();
  Task task{{"a", 2}};
  DensestOutcome out = s_densest_alk(chain, task);
  std::ostringstream text;
  write_trace(text, out.trace, chain, task);
  CHECK(text.str().find("round 1") != std::string::npos);
  CHECK(text.str().find("chosen") != std::string::npos);
}
