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

#include "teamform/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "teamform/errors.hpp"
#include "teamform/io.hpp"

namespace teamform {
namespace {

std::size_t overlap(const AuthorSet& a, const AuthorSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

std::map<std::string, std::string> PublicationCorpus::default_domain_map() {
  return {{"T", "T"}, {"AI", "AI"}, {"DB", "DB"}, {"DM", "DM"}};
}

AuthorSet make_author_set(std::vector<std::string> authors) {
  std::sort(authors.begin(), authors.end());
  authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
  return authors;
}

PublicationCorpus parse_corpus(std::string_view text) {
  PublicationCorpus corpus;
  corpus.domain_map = PublicationCorpus::default_domain_map();
  std::set<std::string> ids;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    if (tok[0] != "pub" || tok.size() < 4) {
      throw ParseError(line, "expected: pub <pub-id> <domain> <author-id> [<author-id>...]");
    }
    if (!ids.insert(tok[1]).second) throw ParseError(line, "duplicate publication " + tok[1]);
    Publication p{tok[1], tok[2], make_author_set({tok.begin() + 3, tok.end()})};
    corpus.publications.push_back(std::move(p));
  }
  return corpus;
}

std::string serialize_corpus(const PublicationCorpus& corpus) {
  std::ostringstream out;
  for (const auto& p : corpus.publications) {
    out << "pub " << p.id << ' ' << p.domain;
    for (const auto& a : p.authors) out << ' ' << a;
    out << '\n';
  }
  return out.str();
}

std::map<std::string, std::string> parse_domain_map(std::string_view text) {
  std::map<std::string, std::string> out;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    if (tok[0] != "domain" || tok.size() != 3) throw ParseError(line, "expected: domain <tag> <skill>");
    if (!out.emplace(tok[1], tok[2]).second) throw ParseError(line, "duplicate domain " + tok[1]);
  }
  return out;
}

SkillGraph build_coauthor_graph(const PublicationCorpus& corpus, int min_papers, int min_copapers) {
  if (min_papers < 1 || min_copapers < 1) throw DomainError("ingest thresholds must be at least 1");
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::size_t>> papers;  // author -> publication indices
  for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
    for (const auto& a : corpus.publications[i].authors) {
      auto [it, fresh] = papers.try_emplace(a);
      if (fresh) order.push_back(a);
      it->second.push_back(i);
    }
  }

  SkillGraph g;
  std::vector<std::string> kept;
  for (const auto& a : order) {
    const auto& mine = papers.at(a);
    if (mine.size() < static_cast<std::size_t>(min_papers)) continue;
    std::vector<std::string> skills;
    for (std::size_t i : mine) {
      auto it = corpus.domain_map.find(corpus.publications[i].domain);
      if (it != corpus.domain_map.end() &&
          std::find(skills.begin(), skills.end(), it->second) == skills.end()) {
        skills.push_back(it->second);
      }
    }
    g.add_node(a, std::move(skills));
    kept.push_back(a);
  }
  for (std::size_t x = 0; x < kept.size(); ++x) {
    const auto& px = papers.at(kept[x]);
    for (std::size_t y = x + 1; y < kept.size(); ++y) {
      const auto& py = papers.at(kept[y]);
      std::size_t shared = 0;
      for (auto i = px.begin(), j = py.begin(); i != px.end() && j != py.end();) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++shared;
          ++i;
          ++j;
        }
      }
      if (shared < static_cast<std::size_t>(min_copapers)) continue;
      auto together = static_cast<std::int64_t>(px.size() + py.size() - shared);
      auto common = static_cast<std::int64_t>(shared);
      Weight affinity = Weight::from_int(common);
      Weight distance = Weight::round(Rational(1) - Rational(common, together));
      g.add_edge(g.at(kept[x]), g.at(kept[y]), affinity, distance);
    }
  }
  return g;
}

std::int64_t team_pubs(const AuthorSet& team, const PublicationCorpus& corpus) {
  return std::count_if(corpus.publications.begin(), corpus.publications.end(),
                       [&](const Publication& p) { return overlap(team, p.authors) == p.authors.size(); });
}

std::int64_t partial_team_pubs(const AuthorSet& team, const PublicationCorpus& corpus) {
  return std::count_if(corpus.publications.begin(), corpus.publications.end(),
                       [&](const Publication& p) { return 2 * overlap(team, p.authors) >= p.authors.size(); });
}

Rational team_pub_ratio(const AuthorSet& team, const PublicationCorpus& corpus, RatioScope scope) {
  if (corpus.publications.empty()) throw DomainError("team_pub_ratio over an empty corpus");
  Rational sum;
  std::int64_t counted = 0;
  for (const auto& p : corpus.publications) {
    auto common = static_cast<std::int64_t>(overlap(team, p.authors));
    if (scope == RatioScope::kTouchingTeam && common == 0) continue;
    auto together = static_cast<std::int64_t>(team.size() + p.authors.size()) - common;
    sum += Rational(common, together);
    ++counted;
  }
  if (counted == 0) return Rational(0);
  return sum / Rational(counted);
}

RankTable parse_ranks(std::string_view text) {
  RankTable table;
  for (const auto& [line, tok] : detail::tokenize_lines(text)) {
    if (tok[0] != "rank" || tok.size() != 3) throw ParseError(line, "expected: rank <author-id> <rank>");
    std::int64_t r = 0;
    const std::string& num = tok[2];
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
    if (ec != std::errc() || ptr != num.data() + num.size() || r < 1) {
      throw ParseError(line, "rank must be a positive integer, got " + num);
    }
    if (!table.ranks.emplace(tok[1], r).second) throw ParseError(line, "duplicate rank for " + tok[1]);
  }
  return table;
}

Rational team_rank(const AuthorSet& team, const RankTable& ranks, const AuthorSet& skilled) {
  Rational sum;
  std::int64_t counted = 0;
  for (const auto& member : team) {
    if (!std::binary_search(skilled.begin(), skilled.end(), member)) continue;
    ++counted;
    auto it = ranks.ranks.find(member);
    if (it != ranks.ranks.end()) sum += Rational(1, it->second);
  }
  if (counted == 0) throw DomainError("team_rank needs at least one skilled member");
  return Rational(1000) * sum / Rational(counted);
}

PublicationCorpus synthesize_corpus(const SyntheticCorpusConfig& config, std::uint64_t seed) {
  if (config.authors == 0 || config.groups == 0 || config.domains.empty()) {
    throw DomainError("synthetic corpus needs authors, groups and domains");
  }
  if (config.min_authors_per_paper < 1 || config.min_authors_per_paper > config.max_authors_per_paper) {
    throw DomainError("bad authors-per-paper range");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution cross(config.cross_group_probability);
  std::bernoulli_distribution off_domain(config.off_domain_probability);

  std::vector<std::vector<std::size_t>> members(config.groups);
  for (std::size_t a = 0; a < config.authors; ++a) members[a % config.groups].push_back(a);
  // Seniority skew: earlier members of a group are drawn more often.
  auto pick_in_group = [&](const std::vector<std::size_t>& group) {
    std::size_t x = uniform(0, group.size() - 1);
    std::size_t y = uniform(0, group.size() - 1);
    return group[std::min(x, y)];
  };

  PublicationCorpus corpus;
  corpus.domain_map = PublicationCorpus::default_domain_map();
  for (std::size_t p = 0; p < config.papers; ++p) {
    std::size_t group = uniform(0, config.groups - 1);
    const std::string& domain = off_domain(rng) ? config.domains[uniform(0, config.domains.size() - 1)]
                                                : config.domains[group % config.domains.size()];
    std::size_t want = uniform(config.min_authors_per_paper, config.max_authors_per_paper);
    std::vector<std::string> authors;
    for (std::size_t tries = 0; authors.size() < want && tries < 8 * want; ++tries) {
      std::size_t g = cross(rng) ? uniform(0, config.groups - 1) : group;
      if (members[g].empty()) continue;
      std::string name = "a" + std::to_string(pick_in_group(members[g]) + 1);
      if (std::find(authors.begin(), authors.end(), name) == authors.end()) authors.push_back(std::move(name));
    }
    corpus.publications.push_back({"p" + std::to_string(p + 1), domain, make_author_set(std::move(authors))});
  }
  return corpus;
}

}  // namespace teamform
