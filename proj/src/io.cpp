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

#include "teamform/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "teamform/errors.hpp"

namespace teamform {
namespace detail {

std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace detail

namespace {

Weight parse_weight(const std::string& tok, std::size_t line) {
  if (!tok.empty() && tok[0] == '-') throw ParseError(line, "negative weight " + tok);
  auto w = Weight::parse(tok);
  if (!w) throw ParseError(line, "malformed weight " + tok);
  return *w;
}

NodeId resolve(const SkillGraph& g, const std::string& label, std::size_t line) {
  auto id = g.find(label);
  if (!id) throw ParseError(line, "unknown node " + label);
  return *id;
}

}  // namespace

SkillGraph load_graph(std::string_view text) {
  SkillGraph g;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    const std::string& kind = tok[0];
    try {
      if (kind == "node") {
        if (tok.size() < 2 || tok.size() > 3) throw ParseError(line, "expected: node <id> [skills]");
        std::vector<std::string> skills;
        if (tok.size() == 3) {
          skills = detail::split(tok[2], ',');
          if (std::any_of(skills.begin(), skills.end(), [](const auto& s) { return s.empty(); })) {
            throw ParseError(line, "empty skill name");
          }
        }
        if (g.find(tok[1])) throw ParseError(line, "duplicate node " + tok[1]);
        g.add_node(tok[1], std::move(skills));
      } else if (kind == "edge") {
        if (tok.size() < 4 || tok.size() > 5) {
          throw ParseError(line, "expected: edge <u> <v> <affinity> [<distance>]");
        }
        NodeId u = resolve(g, tok[1], line);
        NodeId v = resolve(g, tok[2], line);
        if (u == v) throw ParseError(line, "self edge on node " + tok[1]);
        if (g.find_edge(u, v)) throw ParseError(line, "duplicate edge " + tok[1] + " " + tok[2]);
        Weight affinity = parse_weight(tok[3], line);
        Weight distance = tok.size() == 5 ? parse_weight(tok[4], line) : affinity;
        g.add_edge(u, v, affinity, distance);
      } else if (kind == "loop") {
        if (tok.size() != 3) throw ParseError(line, "expected: loop <id> <weight>");
        g.add_loop(resolve(g, tok[1], line), parse_weight(tok[2], line));
      } else {
        throw ParseError(line, "unknown record '" + kind + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
  }
  return g;
}

std::string serialize_graph(const SkillGraph& g) {
  std::ostringstream out;
  for (NodeId id : g.nodes()) {
    out << "node " << g.label(id);
    const auto& skills = g.skills(id);
    for (std::size_t i = 0; i < skills.size(); ++i) out << (i ? "," : " ") << skills[i];
    out << '\n';
  }
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const Edge& e : edges) {
    out << "edge " << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.affinity << ' ' << e.distance
        << '\n';
  }
  for (NodeId id : g.nodes()) {
    for (const Loop& l : g.loops(id)) out << "loop " << g.label(id) << ' ' << l.weight << '\n';
  }
  return out.str();
}

Task load_task(std::string_view text) {
  Task task;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    if (tok[0] != "require" || tok.size() != 3) throw ParseError(line, "expected: require <skill> <k>");
    int k = 0;
    const std::string& num = tok[2];
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw ParseError(line, "malformed count " + num);
    }
    if (k < 0) throw ParseError(line, "negative count " + num);
    if (task.mentions(tok[1])) throw ParseError(line, "duplicate skill " + tok[1]);
    task.add(tok[1], k);
  }
  return task;
}

std::string serialize_task(const Task& task) {
  std::ostringstream out;
  for (const auto& r : task.requirements()) out << "require " << r.skill << ' ' << r.count << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace teamform
