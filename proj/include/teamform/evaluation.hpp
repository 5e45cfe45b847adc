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

// Publication-corpus ingestion into a co-authorship SkillGraph, and
// publication-based team quality metrics.
//
//   corpus:      pub <pub-id> <domain> <author-id> [<author-id>...]
//   ranks:       rank <author-id> <rank>
//   domain map:  domain <tag> <skill>

#ifndef TEAMFORM_EVALUATION_HPP_
#define TEAMFORM_EVALUATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

using AuthorSet = std::vector<std::string>;  // sorted, unique

struct Publication {
  std::string id;
  std::string domain;
  AuthorSet authors;
};

struct PublicationCorpus {
  std::vector<Publication> publications;
  std::map<std::string, std::string> domain_map;  // domain tag -> skill

  // T, AI, DB, DM mapped to themselves.
  static std::map<std::string, std::string> default_domain_map();
};

PublicationCorpus parse_corpus(std::string_view text);
std::string serialize_corpus(const PublicationCorpus& corpus);
std::map<std::string, std::string> parse_domain_map(std::string_view text);

// Authors with at least min_papers papers become nodes, in order of first
// appearance. Two kept authors are joined when they share at least
// min_copapers papers: affinity = shared count, distance = 1 - shared/union
// rounded to six decimals. Skills are the mapped domains an author
// published in; unmapped domains grant none.
SkillGraph build_coauthor_graph(const PublicationCorpus& corpus, int min_papers = 3, int min_copapers = 2);

AuthorSet make_author_set(std::vector<std::string> authors);

std::int64_t team_pubs(const AuthorSet& team, const PublicationCorpus& corpus);
std::int64_t partial_team_pubs(const AuthorSet& team, const PublicationCorpus& corpus);

enum class RatioScope {
  kAllPublications,   // average over the whole corpus
  kTouchingTeam,      // only publications sharing an author with the team
};

// Mean Jaccard similarity between the team and each publication's authors.
Rational team_pub_ratio(const AuthorSet& team, const PublicationCorpus& corpus,
                        RatioScope scope = RatioScope::kAllPublications);

struct RankTable {
  std::map<std::string, std::int64_t> ranks;
};

RankTable parse_ranks(std::string_view text);

// 1000 * mean over skilled members of 1/rank; unranked members count as 0
// but still belong to the mean's denominator.
Rational team_rank(const AuthorSet& team, const RankTable& ranks, const AuthorSet& skilled);

struct SyntheticCorpusConfig {
  std::size_t authors = 80;
  std::size_t groups = 8;
  std::size_t papers = 420;
  std::vector<std::string> domains{"T", "AI", "DB", "DM"};
  std::size_t min_authors_per_paper = 2;
  std::size_t max_authors_per_paper = 4;
  double cross_group_probability = 0.1;
  double off_domain_probability = 0.2;
};

// Research groups of authors with a home domain; each paper draws a group,
// mostly publishes in its home domain, and mostly picks co-authors inside
// the group with a skew toward the group's senior members.
PublicationCorpus synthesize_corpus(const SyntheticCorpusConfig& config, std::uint64_t seed);

}  // namespace teamform

#endif  // TEAMFORM_EVALUATION_HPP_
