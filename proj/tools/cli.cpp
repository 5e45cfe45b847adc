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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "teamform/densest.hpp"
#include "teamform/diameter.hpp"
#include "teamform/errors.hpp"
#include "teamform/evaluation.hpp"
#include "teamform/heuristics.hpp"
#include "teamform/io.hpp"
#include "teamform/oracle.hpp"
#include "teamform/reduction.hpp"

namespace teamform::cli {
namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAlgos{"sdensest",  "mdensest",    "mindiameter",
                                      "enhanced", "partialtrim", "completetrim"};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// FNV-1a, 64 bit.
std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string decimal(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return out.str();
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int parse_count(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
    throw ParseError(0, "bad count '" + text + "'");
  }
  return v;
}

// "3,5,7" or "3-7" items, comma separated; blank means none.
std::vector<int> parse_k_range(const std::string& text) {
  std::vector<int> ks;
  for (const auto& item : detail::split(text, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      ks.push_back(parse_count(item));
      continue;
    }
    int lo = parse_count(item.substr(0, dash));
    int hi = parse_count(item.substr(dash + 1));
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> out;
  for (auto& item : detail::split(text, ',')) {
    if (!item.empty()) out.push_back(std::move(item));
  }
  return out;
}

struct Solved {
  Team team;
  std::optional<Weight> host_diameter;
};

Solved run_algo(const std::string& algo, const SkillGraph& g, const Task& task, std::ostream* trace) {
  Solved out;
  if (algo == "sdensest" || algo == "mdensest") {
    DensestOutcome r = algo == "sdensest" ? s_densest_alk(g, task) : m_densest_alk(g, task);
    if (trace) write_trace(*trace, r.trace, g, task);
    out.team = std::move(r.team);
  } else if (algo == "mindiameter") {
    DiameterOutcome r = min_diameter(g, task);
    if (trace) write_pivot_report(*trace, r.report, g);
    out.team = std::move(r.team);
    out.host_diameter = r.host_diameter;
  } else {
    HeuristicOutcome r = algo == "enhanced"      ? enhanced_dense(g, task)
                         : algo == "partialtrim" ? partial_trimmed_dense(g, task)
                                                 : complete_trimmed_dense(g, task);
    if (trace) {
      *trace << "raw " << join(g.labels_of(r.raw.members), ' ') << '\n';
      *trace << "raw_density " << r.raw.density << '\n';
      *trace << "candidate " << join(g.labels_of(r.source), ' ') << '\n';
      *trace << "team " << join(g.labels_of(r.team.members), ' ') << '\n';
    }
    out.team = std::move(r.team);
  }
  return out;
}

struct SolveArgs {
  std::string graph, task, algo, trace;
  std::uint64_t seed = 0;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  auto start = Clock::now();
  std::string graph_text = read_file(a.graph);
  std::string task_text = read_file(a.task);
  SkillGraph g = load_graph(graph_text);
  Task task = load_task(task_text);

  std::ofstream trace_file;
  if (!a.trace.empty()) {
    trace_file.open(a.trace);
    if (!trace_file) throw std::runtime_error("cannot write " + a.trace);
  }
  Solved s = run_algo(a.algo, g, task, a.trace.empty() ? nullptr : &trace_file);
  Weight host = s.host_diameter ? *s.host_diameter : DistanceIndex(g).spread(s.team.members);

  out << "command solve --graph " << a.graph << " --task " << a.task << " --algo " << a.algo << '\n';
  out << "graph_digest " << digest(graph_text) << '\n';
  out << "task_digest " << digest(task_text) << '\n';
  out << "seed " << a.seed << '\n';
  out << "algo " << a.algo << '\n';
  out << "members " << join(g.labels_of(s.team.members), ' ') << '\n';
  out << "size " << s.team.size() << '\n';
  out << "density " << s.team.density << '\n';
  out << "density_decimal " << decimal(s.team.density.to_double()) << '\n';
  out << "diameter " << s.team.diameter.str() << '\n';
  out << "host_diameter " << host.str() << '\n';
  out << "components " << s.team.components << '\n';
  for (const auto& req : task.requirements()) {
    out << "skill " << req.skill << ' ' << skill_count(g, s.team.members, req.skill) << '/' << req.count << '\n';
  }
  out << "wall_time_ms " << decimal(elapsed_ms(start)) << '\n';
  return kExitOk;
}

struct CertifyArgs {
  std::string mode = "ratio";
  std::string kind = "single";
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 10;
  int max_k = 4;
  std::size_t min_requirements = 0;
  std::size_t max_requirements = 0;
  std::vector<std::string> sat_files;
};

CertificateKind parse_kind(const std::string& kind) {
  static const std::map<std::string, CertificateKind> kinds{
      {"single", CertificateKind::kDensitySingle},     {"one-skill", CertificateKind::kDensityOneSkill},
      {"general", CertificateKind::kDensityGeneral},   {"diameter", CertificateKind::kDiameter},
      {"exactness", CertificateKind::kExactness},
  };
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw ParseError(0, "unknown certificate kind " + kind);
  return it->second;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_nodes > kMaxOracleNodes) {
    throw GuardRefusal("--max-nodes " + std::to_string(a.max_nodes) + " exceeds the exhaustive-search limit of " +
                       std::to_string(kMaxOracleNodes));
  }
  if (a.mode == "reduction") {
    std::vector<SatInstance> suite;
    if (a.sat_files.empty()) {
      suite = reduction_fixture_suite();
    } else {
      for (const auto& f : a.sat_files) suite.push_back(parse_sat(read_file(f)));
    }
    out << "instance,vars,clauses,sat,team_exists,pass\n";
    std::size_t failures = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
      ReductionVerdict v = verify_reduction(suite[i]);
      GadgetFacts facts = check_gadget_facts(suite[i]);
      bool pass = v.sat == v.team_exists && facts.literal_pairs_far && facts.clause_biconditional;
      if (!pass) ++failures;
      out << i + 1 << ',' << suite[i].num_vars << ',' << suite[i].clauses.size() << ',' << v.sat << ','
          << v.team_exists << ',' << pass << '\n';
    }
    err << "reduction instances=" << suite.size() << " failures=" << failures << '\n';
    return failures == 0 ? kExitOk : kExitInput;
  }
  if (a.mode != "ratio") throw ParseError(0, "unknown mode " + a.mode);

  CertifyConfig config;
  config.kind = parse_kind(a.kind);
  config.count = a.count;
  config.seed = a.seed;
  config.instances.min_nodes = std::min(a.min_nodes, a.max_nodes);
  config.instances.max_nodes = a.max_nodes;
  config.instances.max_k = a.max_k;
  if (config.kind == CertificateKind::kDensityOneSkill || config.kind == CertificateKind::kDensityGeneral) {
    config.instances.min_requirements = 2;
    config.instances.max_requirements = 3;
  }
  if (a.min_requirements) config.instances.min_requirements = a.min_requirements;
  if (a.max_requirements) config.instances.max_requirements = a.max_requirements;

  CertifyReport report = certify_ratios(config);
  out << "seed,n,ratio,pass\n";
  for (const auto& row : report.rows) {
    out << row.seed << ',' << row.nodes << ',' << row.ratio << ',' << row.pass << '\n';
  }
  err << "kind=" << to_string(report.kind) << " instances=" << report.rows.size()
      << " violations=" << report.violations << " union_violations=" << report.union_violations
      << " min_ratio=" << report.min_ratio << " max_ratio=" << report.max_ratio
      << " mean_ratio=" << decimal(report.mean_ratio) << '\n';
  return report.violations == 0 && report.union_violations == 0 ? kExitOk : kExitInput;
}

struct BenchArgs {
  std::string graph, skills, k_range, algos = "sdensest,enhanced,partialtrim,completetrim";
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  SkillGraph g = load_graph(read_file(a.graph));
  std::vector<int> ks = parse_k_range(a.k_range);
  std::vector<std::string> skills = parse_list(a.skills);
  std::vector<std::string> algos = parse_list(a.algos);
  for (const auto& algo : algos) {
    if (std::find(kAlgos.begin(), kAlgos.end(), algo) == kAlgos.end()) throw ParseError(0, "unknown algo " + algo);
  }
  std::sort(skills.begin(), skills.end());
  std::sort(algos.begin(), algos.end());

  out << "k,skill,algo,status,density,size,components,density_per_node,time_ms\n";
  for (int k : ks) {
    for (const auto& skill : skills) {
      for (const auto& algo : algos) {
        Task task{{skill, k}};
        auto start = Clock::now();
        out << k << ',' << skill << ',' << algo << ',';
        try {
          Solved s = run_algo(algo, g, task, nullptr);
          double per_node = s.team.size() ? s.team.density.to_double() / static_cast<double>(s.team.size()) : 0;
          out << "ok," << decimal(s.team.density.to_double()) << ',' << s.team.size() << ','
              << s.team.components << ',' << decimal(per_node) << ',';
        } catch (const InfeasibleError&) {
          out << "infeasible,,,,,";
        } catch (const HeuristicFailure&) {
          out << "heuristic_failure,,,,,";
        }
        out << decimal(elapsed_ms(start)) << '\n';
      }
    }
  }
  return kExitOk;
}

struct MetricsArgs {
  std::string team, corpus, ranks, skilled, domains, scope = "all";
};

AuthorSet read_authors(const std::string& path) {
  std::vector<std::string> ids;
  for (auto& [line, tok] : detail::tokenize_lines(read_file(path))) {
    ids.insert(ids.end(), tok.begin(), tok.end());
  }
  return make_author_set(std::move(ids));
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out, std::ostream& err) {
  AuthorSet team = read_authors(a.team);
  PublicationCorpus corpus = parse_corpus(read_file(a.corpus));
  if (corpus.publications.empty()) {
    err << "error: corpus " << a.corpus << " has no publications\n";
    return kExitInfeasible;
  }
  if (a.scope != "all" && a.scope != "touching") throw ParseError(0, "unknown scope " + a.scope);
  Rational ratio = team_pub_ratio(team, corpus, a.scope == "all" ? RatioScope::kAllPublications
                                                                 : RatioScope::kTouchingTeam);
  out << "team_size " << team.size() << '\n';
  out << "team_pubs " << team_pubs(team, corpus) << '\n';
  out << "partial_team_pubs " << partial_team_pubs(team, corpus) << '\n';
  out << "team_pub_ratio " << ratio << '\n';
  out << "team_pub_ratio_decimal " << decimal(ratio.to_double()) << '\n';
  out << "team_pub_ratio_scaled " << decimal((ratio * Rational(100000)).to_double()) << '\n';
  if (!a.ranks.empty()) {
    RankTable ranks = parse_ranks(read_file(a.ranks));
    AuthorSet skilled = a.skilled.empty() ? team : read_authors(a.skilled);
    Rational rank = team_rank(team, ranks, skilled);
    out << "team_rank " << rank << '\n';
    out << "team_rank_decimal " << decimal(rank.to_double()) << '\n';
  }
  return kExitOk;
}

struct IngestArgs {
  std::string corpus, domains, out;
  int min_papers = 3;
  int min_copapers = 2;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  PublicationCorpus corpus = parse_corpus(read_file(a.corpus));
  if (!a.domains.empty()) corpus.domain_map = parse_domain_map(read_file(a.domains));
  SkillGraph g = build_coauthor_graph(corpus, a.min_papers, a.min_copapers);
  std::string text = serialize_graph(g);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
    err << "nodes " << g.size() << " edges " << g.edges().size() << '\n';
  }
  return kExitOk;
}

struct ReduceArgs {
  std::string sat, graph_out, task_out, r = "2", r_prime = "3";
};

Weight parse_weight(const std::string& text) {
  auto w = Weight::parse(text);
  if (!w) throw ParseError(0, "bad weight '" + text + "'");
  return *w;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  SatInstance inst = parse_sat(read_file(a.sat));
  ReductionInstance red = sat_to_diameter_stf(inst, {parse_weight(a.r), parse_weight(a.r_prime)});
  write_file(a.graph_out, serialize_graph(red.graph));
  write_file(a.task_out, serialize_task(red.task));
  out << "vars " << inst.num_vars << '\n';
  out << "clauses " << inst.clauses.size() << '\n';
  out << "nodes " << red.graph.size() << '\n';
  out << "k_target " << red.k_target << '\n';
  out << "threshold " << red.threshold.str() << '\n';
  return kExitOk;
}

struct SynthArgs {
  std::uint64_t seed = 0;
  SyntheticCorpusConfig config;
  std::string out;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  std::string text = serialize_corpus(synthesize_corpus(a.config, a.seed));
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Team formation on skill graphs"};
  app.name("teamform");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Form a team with one algorithm");
  s->add_option("--graph", solve.graph, "Graph file")->required();
  s->add_option("--task", solve.task, "Task file")->required();
  s->add_option("--algo", solve.algo, "Algorithm")->required()->check(CLI::IsMember(kAlgos));
  s->add_option("--trace", solve.trace, "Write the solver trace here");
  s->add_option("--seed", solve.seed, "Seed (echoed in the report)");

  CertifyArgs cert;
  auto* c = app.add_subcommand("certify", "Check solvers against exhaustive search");
  c->add_option("--mode", cert.mode, "ratio or reduction")->check(CLI::IsMember({"ratio", "reduction"}));
  c->add_option("--kind", cert.kind, "single, one-skill, general, diameter or exactness");
  c->add_option("--seed", cert.seed, "First instance seed");
  c->add_option("--count", cert.count, "Number of instances");
  c->add_option("--min-nodes", cert.min_nodes, "Smallest instance");
  c->add_option("--max-nodes", cert.max_nodes, "Largest instance");
  c->add_option("--max-k", cert.max_k, "Largest requirement count");
  c->add_option("--min-requirements", cert.min_requirements, "Fewest requirements per task");
  c->add_option("--max-requirements", cert.max_requirements, "Most requirements per task");
  c->add_option("--sat", cert.sat_files, "SAT files for reduction mode (default: built-in suite)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a grid of single-skill tasks");
  b->add_option("--graph", bench.graph, "Graph file")->required();
  b->add_option("--skills", bench.skills, "Comma-separated skills")->required();
  b->add_option("--k-range", bench.k_range, "Comma-separated counts or lo-hi ranges")->required();
  b->add_option("--algos", bench.algos, "Comma-separated algorithms");
  b->add_option("--seed", bench.seed, "Seed");

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "Publication metrics of a team");
  m->add_option("--team", metrics.team, "File of author ids")->required();
  m->add_option("--corpus", metrics.corpus, "Publication corpus")->required();
  m->add_option("--ranks", metrics.ranks, "Rank table");
  m->add_option("--skilled", metrics.skilled, "Skilled author ids (default: whole team)");
  m->add_option("--scope", metrics.scope, "all or touching");

  IngestArgs ingest;
  auto* i = app.add_subcommand("ingest", "Build a co-authorship graph from a corpus");
  i->add_option("--corpus", ingest.corpus, "Publication corpus")->required();
  i->add_option("--min-papers", ingest.min_papers, "Papers needed to become a node");
  i->add_option("--min-copapers", ingest.min_copapers, "Shared papers needed for an edge");
  i->add_option("--domains", ingest.domains, "Domain map file");
  i->add_option("--out", ingest.out, "Output graph file (default: stdout)");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Turn a 3-SAT formula into a diameter instance");
  r->add_option("--sat", reduce.sat, "SAT file")->required();
  r->add_option("--graph-out", reduce.graph_out, "Graph file to write")->required();
  r->add_option("--task-out", reduce.task_out, "Task file to write")->required();
  r->add_option("--r", reduce.r, "Threshold r");
  r->add_option("--r-prime", reduce.r_prime, "Far weight r'");

  SynthArgs synth;
  auto* y = app.add_subcommand("synth", "Generate a synthetic publication corpus");
  y->add_option("--seed", synth.seed, "Seed");
  y->add_option("--authors", synth.config.authors, "Author count");
  y->add_option("--groups", synth.config.groups, "Research groups");
  y->add_option("--papers", synth.config.papers, "Paper count");
  y->add_option("--out", synth.out, "Output corpus file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*s) return cmd_solve(solve, out);
    if (*c) return cmd_certify(cert, out, err);
    if (*b) return cmd_bench(bench, out);
    if (*m) return cmd_metrics(metrics, out, err);
    if (*i) return cmd_ingest(ingest, out, err);
    if (*r) return cmd_reduce(reduce, out);
    if (*y) return cmd_synth(synth, out);
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const HeuristicFailure& e) {
    err << "heuristic failure: " << e.what() << '\n';
    return kExitHeuristic;
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"teamform"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace teamform::cli
