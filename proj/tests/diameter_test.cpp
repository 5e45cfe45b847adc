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
#include "teamform/diameter.hpp"
#include "teamform/errors.hpp"
#include "teamform/oracle.hpp"

using namespace teamform;
using namespace teamform::testing;

namespace {

SkillGraph split_graph() {
  return load_graph("node p a\nnode q\nnode x a\nnode y a\nedge p q 1\nedge x y 1\n");
}

}  // namespace

TEST_CASE("distance index matches single-source runs") {
  SkillGraph chain = f2();
  DistanceIndex idx(chain);
  for (NodeId u : chain.nodes()) {
    auto d = shortest_distances(chain, u);
    for (NodeId v : chain.nodes()) CHECK(idx.distance(u, v) == d.at(v));
  }
  CHECK(idx.path(chain.at("1"), chain.at("4")) == chain.lookup({"1", "2", "3", "4"}));
  CHECK(idx.spread(chain.lookup({"1", "3"})) == w(2));
  CHECK(idx.spread(chain.lookup({"2"})) == w(0));
}

TEST_CASE("d_k") {
  SkillGraph chain = f2();
  DistanceIndex idx(chain);
  CHECK(d_k(chain.at("1"), chain.lookup({"1", "3"}), 2, idx) == w(2));
  SkillGraph tri = f1();
  DistanceIndex tidx(tri);
  CHECK(d_k(tri.at("1"), tri.nodes(), 2, tidx) == w(1));
  SkillGraph split = split_graph();
  DistanceIndex sidx(split);
  CHECK(d_k(split.at("p"), split.lookup({"x", "y"}), 1, sidx).is_infinite());
  CHECK_THROWS_AS(d_k(tri.at("1"), tri.lookup({"2"}), 2, tidx), InfeasibleError);
}

TEST_CASE("path_k") {
  SkillGraph chain = f2();
  DistanceIndex idx(chain);
  CHECK(path_k(chain.at("1"), chain.lookup({"1", "3"}), 2, idx) == chain.lookup({"1", "2", "3"}));
  SkillGraph tri = f1();
  DistanceIndex tidx(tri);
  CHECK(path_k(tri.at("2"), tri.lookup({"1", "3"}), 1, tidx) == tri.lookup({"1", "2"}));
  CHECK(path_k(tri.at("3"), tri.lookup({"3"}), 1, tidx) == tri.lookup({"3"}));
  SkillGraph split = split_graph();
  DistanceIndex sidx(split);
  CHECK_THROWS_AS(path_k(split.at("p"), split.lookup({"x", "y"}), 1, sidx), InfeasibleError);
}

TEST_CASE("min_diameter on the fixtures") {
  SkillGraph tri = f1();
  DiameterOutcome out = min_diameter(tri, Task{{"a", 2}});
  CHECK(out.team.members == tri.lookup({"1", "2"}));
  CHECK(out.team.diameter == w(1));
  CHECK(out.report.chosen == tri.at("1"));

  SkillGraph chain = f2();
  out = min_diameter(chain, Task{{"a", 1}, {"b", 1}});
  CHECK(out.report.rare_skill == "b");
  CHECK(out.report.chosen == chain.at("4"));
  CHECK(out.team.members == chain.lookup({"3", "4"}));
  CHECK(out.team.diameter == w(1));

  CHECK_THROWS_AS(min_diameter(chain, Task{{"b", 2}}), InfeasibleError);
  CHECK(min_diameter(chain, Task{}).team.members.empty());
}

TEST_CASE("min_diameter refuses when every pivot is cut off") {
  SkillGraph g = load_graph("node 1 a\nnode 2 b\nnode 3 a\nedge 1 3 1\n");
  CHECK_THROWS_AS(min_diameter(g, Task{{"a", 1}, {"b", 1}}), InfeasibleError);
}

TEST_CASE("rare skill ties go to the earlier requirement") {
  SkillGraph chain = f2();
  chain.add_node("5", {"b"});
  chain.add_edge(chain.at("4"), chain.at("5"), w(1));
  DiameterOutcome out = min_diameter(chain, Task{{"b", 1}, {"a", 2}});
  CHECK(out.report.rare_skill == "b");
  out = min_diameter(chain, Task{{"a", 2}, {"b", 1}});
  CHECK(out.report.rare_skill == "a");
}

TEST_CASE("min_diameter stays within twice the host optimum") {
  InstanceConfig config;
  config.max_nodes = 11;
  config.edge_probability = 0.5;
  config.independent_distance = true;
  config.max_requirements = 3;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance inst = generate_instance(config, seed);
    INFO("seed " << seed);
    DiameterOutcome out;
    try {
      out = min_diameter(inst.graph, inst.task);
    } catch (const InfeasibleError&) {
      CHECK(brute_diameter_tf(inst.graph, inst.task, Metric::kHost).infinite);
      continue;
    }
    OptimalSolution best = brute_diameter_tf(inst.graph, inst.task, Metric::kHost);
    CHECK(satisfies(inst.graph, out.team.members, inst.task));
    REQUIRE_FALSE(best.infinite);
    CHECK(out.host_diameter.to_rational() <= Rational(2) * best.objective);
    CHECK(out.host_diameter == DistanceIndex(inst.graph).spread(out.team.members));
  }
}

TEST_CASE("pivot report text") {
  SkillGraph tri = f1();
  DiameterOutcome out = min_diameter(tri, Task{{"a", 2}});
  std::ostringstream text;
  write_pivot_report(text, out.report, tri);
  CHECK(text.str().find("pivot 1 R=1") != std::string::npos);
  CHECK(text.str().find("chosen 1") != std::string::npos);
}
