// Copyright 2026 The IdeaReader Authors.
//
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

#ifndef IDEAREADER_TREE_REPORT_H_
#define IDEAREADER_TREE_REPORT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ideareader/citation_graph.h"
#include "ideareader/corpus.h"
#include "ideareader/relevance.h"
#include "ideareader/survey.h"

namespace ideareader::report {

struct TreePaper {
  PaperId id;
  std::string title;
  int year = 0;
  double relevance = 0.0;

  bool operator==(const TreePaper&) const = default;
};

struct TopicNode {
  std::string label;
  Direction direction = Direction::kReferences;
  // Ascending year, ties by ascending id.
  std::vector<TreePaper> papers;

  bool operator==(const TopicNode&) const = default;
};

struct TreeRoot {
  PaperId id;
  std::string title;
  int year = 0;
  std::size_t reference_count = 0;
  std::size_t citation_count = 0;

  bool operator==(const TreeRoot&) const = default;
};

// Root is the target; the left branch holds inspiring topics, the right
// branch influenced topics. Branch topics are ordered by descending maximum
// member relevance and carry unique labels.
struct EvolutionTree {
  TreeRoot root;
  std::vector<TopicNode> reference_branch;
  std::vector<TopicNode> citation_branch;

  bool operator==(const EvolutionTree&) const = default;
};

struct TopicInput {
  survey::SurveyCard card;
  relevance::RankedCluster cluster;
};

struct GraphStats {
  std::size_t reference_count = 0;
  std::size_t citation_count = 0;
};

struct BuiltTree {
  EvolutionTree tree;
  // The input cards reordered to match each branch, labels deduplicated.
  std::vector<survey::SurveyCard> reference_cards;
  std::vector<survey::SurveyCard> citation_cards;
};

BuiltTree build_tree(const PaperRecord& target,
                     std::vector<TopicInput> reference_topics,
                     std::vector<TopicInput> citation_topics,
                     const GraphStats& stats);

struct TargetInfo {
  PaperId id;
  std::string title;
  int year = 0;
  std::vector<std::string> authors;
  std::string venue;
  std::size_t reference_count = 0;
  std::size_t citation_count = 0;

  bool operator==(const TargetInfo&) const = default;
};

// In-memory model of the result document.
struct ResultDocument {
  TargetInfo target;
  std::vector<survey::SurveyCard> topics_inspiring;
  std::vector<survey::SurveyCard> topics_influenced;
  EvolutionTree tree;
  std::string config_digest;
  std::string generated_at;

  bool operator==(const ResultDocument&) const = default;
};

// Rounds to 6 decimal places, the precision kept in serialized documents.
double round6(double value);

// Canonical UTF-8 JSON: sorted keys, 2-space indent, reals rounded to six
// decimals, trailing newline. Byte-identical for equal documents.
std::string serialize_result(const ResultDocument& doc);

// Inverse of serialize_result. Throws DataError on schema violations.
ResultDocument parse_result(std::string_view bytes);

// Single-file printable HTML report with no external resources.
std::string render_report(const ResultDocument& doc);

}  // namespace ideareader::report

#endif  // IDEAREADER_TREE_REPORT_H_
