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

#include "teamform/reduction.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "teamform/diameter.hpp"
#include "teamform/errors.hpp"
#include "teamform/io.hpp"

namespace teamform {
namespace {

int parse_int(const std::string& tok, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "malformed integer " + tok);
  return v;
}

bool literal_true(int literal, unsigned assignment) {
  bool value = assignment >> (std::abs(literal) - 1) & 1u;
  return literal > 0 ? value : !value;
}

// Literal node chosen for each variable under `assignment`, plus every
// clause node.
NodeSet structured_candidate(const SatInstance& inst, const ReductionInstance& red, unsigned assignment) {
  std::vector<NodeId> ids;
  for (int v = 1; v <= inst.num_vars; ++v) {
    ids.push_back(red.graph.at(literal_label(assignment >> (v - 1) & 1u ? v : -v)));
  }
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    ids.push_back(red.graph.at(clause_label(j, 1)));
    ids.push_back(red.graph.at(clause_label(j, 2)));
  }
  return make_node_set(std::move(ids));
}

bool induced_diameter_within(const SkillGraph& g, const NodeSet& members, Weight bound) {
  return diameter(induced_subgraph(g, members)) <= bound;
}

}  // namespace

void SatInstance::validate() const {
  if (num_vars < 0) throw DomainError("negative variable count");
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw DomainError("literal " + std::to_string(lit) + " out of range");
      }
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (clause[a] == clause[b]) throw DomainError("repeated literal in clause");
        if (clause[a] == -clause[b]) throw DomainError("clause contains a variable and its negation");
      }
    }
  }
}

bool SatInstance::satisfiable() const {
  for (unsigned assignment = 0; assignment < (1u << num_vars); ++assignment) {
    bool all = std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) { return literal_true(lit, assignment); });
    });
    if (all) return true;
  }
  return false;
}

SatInstance parse_sat(std::string_view text) {
  SatInstance inst;
  bool header = false;
  int expected = 0;
  std::size_t last_line = 0;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    last_line = line;
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) throw ParseError(line, "duplicate header");
      std::size_t at = tok.size() == 4 && tok[1] == "cnf" ? 2 : 1;
      if (tok.size() != at + 2) throw ParseError(line, "expected: p <N> <M>");
      inst.num_vars = parse_int(tok[at], line);
      expected = parse_int(tok[at + 1], line);
      if (inst.num_vars < 0 || expected < 0) throw ParseError(line, "negative header value");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line, "clause before header");
    std::vector<int> lits;
    for (const auto& t : tok) lits.push_back(parse_int(t, line));
    if (lits.size() == 4 && lits.back() == 0) lits.pop_back();
    if (lits.size() != 3) throw ParseError(line, "clause must have exactly three literals");
    inst.clauses.push_back({lits[0], lits[1], lits[2]});
    try {
      SatInstance probe{inst.num_vars, {inst.clauses.back()}};
      probe.validate();
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!header) throw ParseError(0, "missing header");
  if (static_cast<int>(inst.clauses.size()) != expected) {
    throw ParseError(last_line, "header announces " + std::to_string(expected) + " clauses, found " +
                                    std::to_string(inst.clauses.size()));
  }
  return inst;
}

std::string serialize_sat(const SatInstance& inst) {
  std::ostringstream out;
  out << "p " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return out.str();
}

std::string literal_label(int literal) {
  return (literal < 0 ? "~u" : "u") + std::to_string(std::abs(literal));
}

std::string clause_label(std::size_t clause, int side) {
  return "C" + std::to_string(clause + 1) + "_" + std::to_string(side);
}

ReductionInstance sat_to_diameter_stf(const SatInstance& inst, const ReductionParams& params) {
  inst.validate();
  if (!(params.r < params.r_prime)) throw DomainError("reduction requires r < r'");
  if (params.r.micros() % 2 != 0) throw DomainError("r/2 must be representable with six decimals");
  const Weight r = params.r;
  const Weight half = Weight::from_micros(r.micros() / 2);

  ReductionInstance out;
  SkillGraph& g = out.graph;
  std::vector<int> literals;
  for (int v = 1; v <= inst.num_vars; ++v) {
    for (int lit : {v, -v}) {
      g.add_node(literal_label(lit), {"a"});
      literals.push_back(lit);
    }
  }
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    g.add_node(clause_label(j, 1), {"a"});
    g.add_node(clause_label(j, 2), {"a"});
  }
  auto connect = [&](const std::string& a, const std::string& b, Weight w) { g.add_edge(g.at(a), g.at(b), w, w); };

  for (std::size_t a = 0; a < literals.size(); ++a) {
    for (std::size_t b = a + 1; b < literals.size(); ++b) {
      connect(literal_label(literals[a]), literal_label(literals[b]),
              literals[a] == -literals[b] ? params.r_prime : r);
    }
  }
  const std::size_t m = inst.clauses.size();
  for (std::size_t f = 0; f < m; ++f) {
    connect(clause_label(f, 1), clause_label(f, 2), params.r_prime);
    for (std::size_t h = f + 1; h < m; ++h) {
      for (int sf : {1, 2}) {
        for (int sh : {1, 2}) connect(clause_label(f, sf), clause_label(h, sh), r);
      }
    }
    const auto& clause = inst.clauses[f];
    for (int lit : literals) {
      bool in_clause = std::find(clause.begin(), clause.end(), lit) != clause.end();
      for (int side : {1, 2}) connect(clause_label(f, side), literal_label(lit), in_clause ? half : r);
    }
  }
  out.k_target = inst.num_vars + 2 * static_cast<int>(m);
  out.task.add("a", out.k_target);
  out.threshold = r;
  return out;
}

ReductionVerdict verify_reduction(const SatInstance& inst, const ReductionParams& params) {
  if (inst.num_vars > kMaxReductionVars || static_cast<int>(inst.clauses.size()) > kMaxReductionClauses) {
    throw GuardRefusal("reduction check limited to " + std::to_string(kMaxReductionVars) + " variables and " +
                       std::to_string(kMaxReductionClauses) + " clauses");
  }
  ReductionInstance red = sat_to_diameter_stf(inst, params);
  ReductionVerdict verdict;
  verdict.sat = inst.satisfiable();

  for (unsigned assignment = 0; assignment < (1u << inst.num_vars); ++assignment) {
    if (induced_diameter_within(red.graph, structured_candidate(inst, red, assignment), red.threshold)) {
      verdict.structured_exists = true;
      break;
    }
  }
  verdict.team_exists = verdict.structured_exists;

  const std::size_t n = red.graph.size();
  if (n <= 16) {
    verdict.swept = true;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !found; ++mask) {
      if (std::popcount(mask) < red.k_target) continue;
      NodeSet members;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) members.push_back(red.graph.nodes()[i]);
      }
      if (members.empty() || induced_diameter_within(red.graph, members, red.threshold)) found = true;
    }
    verdict.team_exists = found;
  }
  return verdict;
}

GadgetFacts check_gadget_facts(const SatInstance& inst, const ReductionParams& params) {
  ReductionInstance red = sat_to_diameter_stf(inst, params);
  GadgetFacts facts;
  DistanceIndex host(red.graph);
  for (int v = 1; v <= inst.num_vars; ++v) {
    if (!(host.distance(red.graph.at(literal_label(v)), red.graph.at(literal_label(-v))) > red.threshold)) {
      facts.literal_pairs_far = false;
    }
  }
  for (unsigned assignment = 0; assignment < (1u << inst.num_vars); ++assignment) {
    NodeSet members = structured_candidate(inst, red, assignment);
    SkillGraph sub = induced_subgraph(red.graph, members);
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
      const auto& clause = inst.clauses[j];
      bool meets = std::any_of(clause.begin(), clause.end(),
                               [&](int lit) { return set_contains(members, red.graph.at(literal_label(lit))); });
      Weight d = shortest_distances(sub, red.graph.at(clause_label(j, 1))).at(red.graph.at(clause_label(j, 2)));
      if ((d == red.threshold) != meets) facts.clause_biconditional = false;
    }
  }
  return facts;
}

std::vector<SatInstance> reduction_fixture_suite() {
  std::vector<SatInstance> suite;
  auto all_patterns = [](int a, int b, int c) {
    std::vector<std::array<int, 3>> out;
    for (int s = 0; s < 8; ++s) out.push_back({s & 1 ? -a : a, s & 2 ? -b : b, s & 4 ? -c : c});
    return out;
  };

  suite.push_back({1, {}});
  suite.push_back({2, {}});
  suite.push_back({3, {{1, 2, 3}}});
  suite.push_back({3, {{-1, -2, -3}}});
  suite.push_back({3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}}});

  // All pairs of clauses from the eight sign patterns over {1,2,3}.
  auto pool = all_patterns(1, 2, 3);
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a + 1; b < pool.size(); ++b) suite.push_back({3, {pool[a], pool[b]}});
  }
  // Every sign pattern: unsatisfiable. Dropping any one pattern: satisfiable.
  suite.push_back({3, pool});
  for (std::size_t drop = 0; drop < pool.size(); ++drop) {
    auto clauses = pool;
    clauses.erase(clauses.begin() + static_cast<std::ptrdiff_t>(drop));
    suite.push_back({3, clauses});
  }
  suite.push_back({4, all_patterns(1, 2, 4)});
  suite.push_back({4, all_patterns(2, 3, 4)});
  suite.push_back({4, {{1, 2, 3}, {-2, -3, 4}, {-1, 3, -4}, {1, -2, 4}}});
  return suite;
}

}  // namespace teamform
