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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "teamform/io.hpp"

using teamform::cli::run_cli;

namespace {

std::string data(const std::string& name) { return std::string(TEAMFORM_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

// Report without the wall-time line.
std::string stable_part(const std::string& report) { return report.substr(0, report.find("wall_time_ms")); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "teamform_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("solve reports the team") {
  Run r = run({"solve", "--graph", data("f2.graph"), "--task", data("a2.task"), "--algo", "sdensest"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "density 2"));
  CHECK(has_line(r.out, "size 3"));
  CHECK(has_line(r.out, "members 1 2 3"));
  CHECK(has_line(r.out, "skill a 2/2"));
  CHECK(has_line(r.out, "seed 0"));

  r = run({"solve", "--graph", data("f1.graph"), "--task", data("a2.task"), "--algo", "mindiameter"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "diameter 1"));
  CHECK(has_line(r.out, "size 2"));
}

TEST_CASE("solve is deterministic apart from wall time") {
  for (const char* algo : {"sdensest", "mdensest", "mindiameter", "enhanced", "partialtrim", "completetrim"}) {
    Run a = run({"solve", "--graph", data("f2.graph"), "--task", data("a2.task"), "--algo", algo});
    Run b = run({"solve", "--graph", data("f2.graph"), "--task", data("a2.task"), "--algo", algo});
    CHECK(a.code == 0);
    CHECK(stable_part(a.out) == stable_part(b.out));
    CHECK(a.out.rfind("wall_time_ms") > a.out.rfind("skill a"));
  }
}

TEST_CASE("solve exit codes") {
  Run r = run({"solve", "--graph", data("f2.graph"), "--task", data("b2.task"), "--algo", "mdensest"});
  CHECK(r.code == 2);
  CHECK(r.err.find("skill b") != std::string::npos);
  r = run({"solve", "--graph", data("bad.graph"), "--task", data("a2.task"), "--algo", "sdensest"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  r = run({"solve", "--graph", data("f2.graph"), "--task", data("a2.task"), "--algo", "nope"});
  CHECK(r.code == 1);

  auto graph = scratch("cliques.graph");
  auto task = scratch("a5.task");
  {
    std::ofstream(graph) << "node 1 a\nnode 2 a\nnode 3 a\nnode 4 a\nnode 5 a\nnode 6 a\n"
                            "edge 1 2 1\nedge 2 3 1\nedge 1 3 1\nedge 4 5 1\nedge 5 6 1\nedge 4 6 1\n";
    std::ofstream(task) << "require a 5\n";
  }
  r = run({"solve", "--graph", graph.string(), "--task", task.string(), "--algo", "enhanced"});
  CHECK(r.code == 3);
}

TEST_CASE("solve writes a trace") {
  auto trace = scratch("trace.txt");
  Run r = run({"solve", "--graph", data("f2.graph"), "--task", data("a2.task"), "--algo", "sdensest", "--trace",
               trace.string()});
  CHECK(r.code == 0);
  std::string text = teamform::read_file(trace.string());
  CHECK(text.find("round 1") != std::string::npos);

  r = run({"solve", "--graph", data("f1.graph"), "--task", data("a2.task"), "--algo", "mindiameter", "--trace",
           trace.string()});
  CHECK(teamform::read_file(trace.string()).find("chosen 1") != std::string::npos);
}

TEST_CASE("certify modes") {
  Run r = run({"certify", "--mode", "ratio", "--seed", "3", "--count", "20", "--max-nodes", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("seed,n,ratio,pass\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);

  r = run({"certify", "--mode", "reduction"});
  CHECK(r.code == 0);
  CHECK(r.err.find("failures=0") != std::string::npos);

  r = run({"certify", "--mode", "reduction", "--sat", data("all_patterns.sat")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "1,3,8,0,0,1"));

  r = run({"certify", "--mode", "ratio", "--max-nodes", "30"});
  CHECK(r.code == 4);
  CHECK(r.err.find("refused") != std::string::npos);
}

TEST_CASE("bench rows") {
  Run r = run({"bench", "--graph", data("f2.graph"), "--skills", "b,a", "--k-range", "2,1", "--algos",
               "sdensest,completetrim"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line.substr(0, line.rfind(',')));
  REQUIRE(rows.size() == 9);
  CHECK(rows[1] == "1,a,completetrim,ok,0.000000,1,1,0.000000");
  CHECK(rows[2] == "1,a,sdensest,ok,2.500000,2,1,1.250000");
  CHECK(rows[7] == "2,b,completetrim,infeasible,,,,");

  r = run({"bench", "--graph", data("f2.graph"), "--skills", "a", "--k-range", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "k,skill,algo,status,density,size,components,density_per_node,time_ms\n");
}

TEST_CASE("metrics command") {
  Run r = run({"metrics", "--team", data("metrics.team"), "--corpus", data("metrics.corpus")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "team_pubs 1"));
  CHECK(has_line(r.out, "partial_team_pubs 2"));
  CHECK(has_line(r.out, "team_pub_ratio 7/12"));
  CHECK(has_line(r.out, "team_pub_ratio_scaled 58333.333333"));
  CHECK(r.out.find("team_rank") == std::string::npos);

  r = run({"metrics", "--team", data("rank.team"), "--corpus", data("rank.corpus"), "--ranks", data("metrics.ranks")});
  CHECK(has_line(r.out, "team_rank 375"));

  r = run({"metrics", "--team", data("empty.team"), "--corpus", data("metrics.corpus")});
  CHECK(has_line(r.out, "team_pubs 0"));
  CHECK(has_line(r.out, "partial_team_pubs 0"));
  CHECK(has_line(r.out, "team_pub_ratio 0"));

  r = run({"metrics", "--team", data("metrics.team"), "--corpus", data("empty.corpus")});
  CHECK(r.code == 2);
}

TEST_CASE("ingest, reduce and synth") {
  Run r = run({"ingest", "--corpus", data("ingest.corpus"), "--min-papers", "1"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "edge 1 2 2 0.333333"));
  r = run({"ingest", "--corpus", data("ingest.corpus")});
  CHECK(r.out == "node 1 T,DB,AI\n");

  auto graph = scratch("red.graph");
  auto task = scratch("red.task");
  r = run({"reduce", "--sat", data("one_clause.sat"), "--graph-out", graph.string(), "--task-out", task.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "k_target 5"));
  CHECK(teamform::load_graph(teamform::read_file(graph.string())).size() == 8);
  CHECK(teamform::read_file(task.string()) == "require a 5\n");

  Run a = run({"synth", "--seed", "9", "--papers", "30"});
  Run b = run({"synth", "--seed", "9", "--papers", "30"});
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 30);
}
