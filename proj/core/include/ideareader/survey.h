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

#ifndef IDEAREADER_SURVEY_H_
#define IDEAREADER_SURVEY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideareader/citation_graph.h"
#include "ideareader/corpus.h"
#include "ideareader/provider.h"
#include "ideareader/tfidf.h"

namespace ideareader::survey {

struct PaperSummary {
  PaperId paper_id;
  std::string title;
  int year = 0;
  double relevance = 0.0;
  std::string citation_tag;
  // Aligned summary sentence; always starts with citation_tag.
  std::string sentence;

  bool operator==(const PaperSummary&) const = default;
};

// One topic survey: a heading, one general sentence, and one summary
// sentence per selected paper in relevance order.
struct SurveyCard {
  Direction direction = Direction::kReferences;
  std::string topic_label;
  std::string general_sentence;
  std::vector<PaperSummary> paper_summaries;

  bool operator==(const SurveyCard&) const = default;
};

// Fallback heading when no candidate phrase survives analysis.
inline constexpr std::string_view kFallbackLabel = "Topic";

// Scores every 1-3 gram of the analyzed titles and abstracts as
//   (occurrences across the papers) * (mean idf of its tokens) * 1.2^(len-1)
// and returns the best phrase title-cased; ties go to the lexicographically
// smaller phrase.
std::string extract_topic_label(std::span<const PaperRecord> selected,
                                const embedding::TfidfModel& tfidf);

struct GeneralSentence {
  std::string sentence;
  bool from_provider = false;
  std::optional<std::string> warning;
};

// Provider mode keeps the first sentence of POST {base_url}/summarize.
// Fallback: among the first three sentences of every abstract, the one whose
// TF-IDF vector is closest (cosine) to the pool centroid; earliest on ties.
// Provider failures fall back and set `warning`. Throws DataError when every
// abstract is empty.
GeneralSentence generate_general_sentence(
    std::span<const std::string> abstracts, const ProviderEndpoint& summarizer,
    const embedding::TfidfModel& tfidf);

enum class VerdictSource { kProvider, kRuleFallback };

struct SentenceVerdict {
  std::string sentence;
  bool is_objective = false;
  double score = 0.0;
  VerdictSource source = VerdictSource::kRuleFallback;
};

inline constexpr double kObjectiveThreshold = 2.0;

std::span<const std::string_view> objective_cues();

// 2 for a cue phrase (case-insensitive) plus 1 when `position` (1-based,
// within its abstract) is at most 3.
double objective_rule_score(std::string_view sentence, std::size_t position);

struct Classification {
  std::vector<SentenceVerdict> verdicts;
  std::optional<std::string> warning;
};

// Classifies the sentences of one abstract, given in order. Provider mode
// posts to {base_url}/classify; on failure the rule fallback is used and
// `warning` is set.
Classification classify_objective(std::span<const std::string> sentences,
                                  const ProviderEndpoint& classifier);

struct SummarySentence {
  std::string sentence;
  // Set when the abstract was empty and the title stood in.
  bool from_title = false;
  std::optional<std::string> warning;
};

SummarySentence extract_summary_sentence(const PaperRecord& paper,
                                         const ProviderEndpoint& classifier);

struct VerbForms {
  std::string_view base;
  std::string_view third_person;
  std::string_view past;
};

// Present-tense reporting verbs and their past forms.
std::span<const VerbForms> reporting_verbs();
// Sentence-initial subjects replaced by the citation tag, longest first.
std::span<const std::string_view> subject_patterns();

// "Family et al. (year)", or "Family (year)" for a single author.
std::string citation_tag(const PaperRecord& paper);

struct AlignedSentence {
  std::string citation_tag;
  std::string sentence;
};

// Replaces a leading subject pattern with the citation tag and moves the
// following reporting verb into the past tense. Sentences without a subject
// pattern get "tag: " prepended unchanged.
AlignedSentence align_subject_tense(std::string_view sentence,
                                    const PaperRecord& paper);

// Validates the card invariants; throws InternalError on violation.
SurveyCard build_survey_card(Direction direction, std::string label,
                             std::string general,
                             std::vector<PaperSummary> summaries);

}  // namespace ideareader::survey

#endif  // IDEAREADER_SURVEY_H_
