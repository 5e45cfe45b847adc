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

#ifndef TEAMFORM_TESTS_FIXTURES_HPP_
#define TEAMFORM_TESTS_FIXTURES_HPP_

#include "teamform/graph.hpp"
#include "teamform/io.hpp"

namespace teamform::testing {

// Triangle, every node skill a, unit affinity and distance.
inline constexpr const char* kF1 =
    "node 1 a\nnode 2 a\nnode 3 a\n"
    "edge 1 2 1 1\nedge 2 3 1 1\nedge 1 3 1 1\n";

// Chain 1-2-3-4 with affinities 5, 1, 2 and unit distances.
inline constexpr const char* kF2 =
    "node 1 a\nnode 2\nnode 3 a\nnode 4 b\n"
    "edge 1 2 5 1\nedge 2 3 1 1\nedge 3 4 2 1\n";

// Two heavy pairs joined by a light bridge, every node skill a.
inline constexpr const char* kF3 =
    "node 1 a\nnode 2 a\nnode 3 a\nnode 4 a\n"
    "edge 1 2 5\nedge 3 4 5\nedge 2 3 1\n";

inline SkillGraph f1() { return load_graph(kF1); }
inline SkillGraph f2() { return load_graph(kF2); }
inline SkillGraph f3() { return load_graph(kF3); }

inline Weight w(std::int64_t units) { return Weight::from_int(units); }

// Nodes {3,4}, edge (3,4) of weight 2, a loop of weight 1 at 3.
inline SkillGraph looped_pair() {
  SkillGraph g;
  g.add_node("3", {"a"});
  g.add_node("4", {"b"});
  g.add_edge(0, 1, w(2));
  g.add_loop(0, w(1));
  return g;
}

}  // namespace teamform::testing

#endif  // TEAMFORM_TESTS_FIXTURES_HPP_
