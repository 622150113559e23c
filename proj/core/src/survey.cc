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

#include "ideareader/survey.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "http_client.h"
#include "ideareader/errors.h"
#include "ideareader/text.h"

namespace ideareader::survey {
namespace {

constexpr std::array<std::string_view, 10> kObjectiveCues = {
    "we propose", "we present",    "we introduce", "we develop",
    "we design",  "this paper",    "in this paper", "our goal",
    "aims to",    "we describe",
};

constexpr std::array<VerbForms, 30> kReportingVerbs = {{
    {"propose", "proposes", "proposed"},
    {"present", "presents", "presented"},
    {"introduce", "introduces", "introduced"},
    {"develop", "develops", "developed"},
    {"design", "designs", "designed"},
    {"show", "shows", "showed"},
    {"describe", "describes", "described"},
    {"study", "studies", "studied"},
    {"investigate", "investigates", "investigated"},
    {"use", "uses", "used"},
    {"is", "is", "was"},
    {"are", "are", "were"},
    {"demonstrate", "demonstrates", "demonstrated"},
    {"provide", "provides", "provided"},
    {"explore", "explores", "explored"},
    {"analyze", "analyzes", "analyzed"},
    {"evaluate", "evaluates", "evaluated"},
    {"consider", "considers", "considered"},
    {"address", "addresses", "addressed"},
    {"discuss", "discusses", "discussed"},
    {"examine", "examines", "examined"},
    {"extend", "extends", "extended"},
    {"apply", "applies", "applied"},
    {"formulate", "formulates", "formulated"},
    {"derive", "derives", "derived"},
    {"report", "reports", "reported"},
    {"find", "finds", "found"},
    {"focus", "focuses", "focused"},
    {"establish", "establishes", "established"},
    {"compare", "compares", "compared"},
}};

constexpr std::array<std::string_view, 6> kSubjectPatterns = {
    "In this paper, we", "In this paper we", "This paper",
    "The authors",       "Our work",         "We",
};

constexpr double kPhraseLengthBoost = 1.2;

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closes a sentence that lacks a terminal punctuation mark.
std::string terminate(std::string sentence) {
  if (!sentence.empty() && !is_terminator(sentence.back())) sentence += '.';
  return sentence;
}

std::string join(const std::vector<std::string>& tokens, std::size_t begin,
                 std::size_t len) {
  std::string out;
  for (std::size_t i = begin; i < begin + len; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string fallback_general_sentence(std::span<const std::string> abstracts,
                                      const embedding::TfidfModel& tfidf) {
  std::vector<std::string> pool;
  for (const std::string& abstract : abstracts) {
    std::vector<std::string> sentences = text::split_sentences(abstract);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, sentences.size()); ++i)
      pool.push_back(std::move(sentences[i]));
  }
  if (pool.empty())
    throw DataError("generate_general_sentence: every abstract is empty");

  std::vector<embedding::SparseVector> vectors;
  std::map<std::uint32_t, double> centroid;
  for (const std::string& s : pool) {
    vectors.push_back(tfidf.embed(s));
    for (const auto& [c, w] : vectors.back().entries) centroid[c] += w;
  }
  embedding::SparseVector center;
  double center_norm2 = 0.0;
  for (const auto& [c, w] : centroid) {
    double v = w / static_cast<double>(pool.size());
    center.entries.emplace_back(c, v);
    center_norm2 += v * v;
  }
  const double center_norm = std::sqrt(center_norm2);

  std::size_t best = 0;
  double best_cosine = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    // embed() rows are unit length or zero.
    double cosine = 0.0;
    if (!vectors[i].is_zero() && center_norm > 0.0)
      cosine = vectors[i].dot(center) / center_norm;
    if (cosine > best_cosine) {
      best_cosine = cosine;
      best = i;
    }
  }
  return pool[best];
}

std::string provider_general_sentence(std::span<const std::string> abstracts,
                                      const ProviderEndpoint& summarizer) {
  nlohmann::json body;
  body["documents"] = nlohmann::json::array();
  for (const std::string& a : abstracts) body["documents"].push_back(a);
  nlohmann::json response = internal::post_json(summarizer, "/summarize", body);
  if (!response.is_object() || !response.contains("summary") ||
      !response["summary"].is_string())
    throw ProviderError(ProviderError::Kind::kMalformedBody,
                        "expected {\"summary\": \"...\"}");
  std::vector<std::string> sentences =
      text::split_sentences(response["summary"].get<std::string>());
  if (sentences.empty())
    throw ProviderError(ProviderError::Kind::kMalformedBody, "empty summary");
  return sentences.front();
}

std::vector<bool> provider_labels(std::span<const std::string> sentences,
                                  const ProviderEndpoint& classifier) {
  using Kind = ProviderError::Kind;
  nlohmann::json body;
  body["sentences"] = nlohmann::json::array();
  for (const std::string& s : sentences) body["sentences"].push_back(s);
  nlohmann::json response = internal::post_json(classifier, "/classify", body);
  if (!response.is_object() || !response.contains("labels") ||
      !response["labels"].is_array())
    throw ProviderError(Kind::kMalformedBody, "expected {\"labels\": [...]}");
  const nlohmann::json& labels = response["labels"];
  if (labels.size() != sentences.size())
    throw ProviderError(Kind::kRowCountMismatch,
                        "sent " + std::to_string(sentences.size()) +
                            " sentences, received " +
                            std::to_string(labels.size()) + " labels");
  std::vector<bool> out;
  for (const nlohmann::json& label : labels) {
    if (!label.is_boolean())
      throw ProviderError(Kind::kMalformedBody, "label is not a boolean");
    out.push_back(label.get<bool>());
  }
  return out;
}

// Length of the subject pattern that starts `sentence`, or 0.
std::size_t match_subject(std::string_view sentence) {
  for (std::string_view pattern : kSubjectPatterns) {
    if (!text::starts_with_ignore_case(sentence, pattern)) continue;
    if (sentence.size() > pattern.size() && is_alnum(sentence[pattern.size()]))
      continue;
    return pattern.size();
  }
  return 0;
}

const VerbForms* find_verb(std::string_view word) {
  std::string lower = text::to_lower(word);
  for (const VerbForms& v : kReportingVerbs) {
    if (lower == v.base || lower == v.third_person) return &v;
  }
  return nullptr;
}

}  // namespace

std::string extract_topic_label(std::span<const PaperRecord> selected,
                                const embedding::TfidfModel& tfidf) {
  if (selected.empty())
    throw std::invalid_argument("extract_topic_label: no papers");

  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // phrase -> (occurrences, length)
  std::map<std::string, double> mean_idf;
  for (const PaperRecord& paper : selected) {
    for (const std::string* field : {&paper.title, &paper.abstract}) {
      std::vector<std::string> tokens = text::tokenize(*field);
      for (std::size_t len = 1; len <= 3; ++len) {
        for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
          std::string phrase = join(tokens, i, len);
          auto [it, inserted] = counts.try_emplace(phrase, 0, len);
          ++it->second.first;
          if (inserted) {
            double sum = 0.0;
            for (std::size_t j = i; j < i + len; ++j) sum += tfidf.idf(tokens[j]);
            mean_idf.emplace(phrase, sum / static_cast<double>(len));
          }
        }
      }
    }
  }
  if (counts.empty()) return std::string(kFallbackLabel);

  const std::string* best = nullptr;
  double best_score = 0.0;
  // Map iteration is lexicographic, so only a strictly higher score wins.
  for (const auto& [phrase, entry] : counts) {
    double score = static_cast<double>(entry.first) * mean_idf[phrase] *
                   std::pow(kPhraseLengthBoost, static_cast<double>(entry.second - 1));
    if (best == nullptr || score > best_score * (1.0 + 1e-12)) {
      best = &phrase;
      best_score = score;
    }
  }
  return text::title_case(*best);
}

GeneralSentence generate_general_sentence(
    std::span<const std::string> abstracts, const ProviderEndpoint& summarizer,
    const embedding::TfidfModel& tfidf) {
  std::vector<std::string> nonempty;
  for (const std::string& a : abstracts) {
    if (!text::trim(a).empty()) nonempty.push_back(a);
  }
  if (nonempty.empty())
    throw DataError("generate_general_sentence: every abstract is empty");

  GeneralSentence out;
  if (summarizer.enabled()) {
    try {
      out.sentence = terminate(provider_general_sentence(nonempty, summarizer));
      out.from_provider = true;
      return out;
    } catch (const ProviderError& e) {
      out.warning = std::string("summarizer unavailable, using fallback: ") + e.what();
    }
  }
  out.sentence = terminate(fallback_general_sentence(nonempty, tfidf));
  return out;
}

std::span<const std::string_view> objective_cues() { return kObjectiveCues; }

double objective_rule_score(std::string_view sentence, std::size_t position) {
  std::string lower = text::to_lower(sentence);
  double score = 0.0;
  for (std::string_view cue : kObjectiveCues) {
    if (lower.find(cue) != std::string::npos) {
      score += 2.0;
      break;
    }
  }
  if (position >= 1 && position <= 3) score += 1.0;
  return score;
}

Classification classify_objective(std::span<const std::string> sentences,
                                  const ProviderEndpoint& classifier) {
  Classification out;
  if (sentences.empty()) return out;
  if (classifier.enabled()) {
    try {
      std::vector<bool> labels = provider_labels(sentences, classifier);
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        out.verdicts.push_back({sentences[i], labels[i], labels[i] ? 1.0 : 0.0,
                                VerdictSource::kProvider});
      }
      return out;
    } catch (const ProviderError& e) {
      out.warning = std::string("classifier unavailable, using fallback: ") + e.what();
    }
  }
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    double score = objective_rule_score(sentences[i], i + 1);
    out.verdicts.push_back({sentences[i], score >= kObjectiveThreshold, score,
                            VerdictSource::kRuleFallback});
  }
  return out;
}

SummarySentence extract_summary_sentence(const PaperRecord& paper,
                                         const ProviderEndpoint& classifier) {
  SummarySentence out;
  std::vector<std::string> sentences = text::split_sentences(paper.abstract);
  if (sentences.empty()) {
    out.sentence = std::string(text::trim(paper.title));
    out.from_title = true;
    return out;
  }
  Classification classes = classify_objective(sentences, classifier);
  out.warning = classes.warning;
  const SentenceVerdict* best = nullptr;
  for (const SentenceVerdict& v : classes.verdicts) {
    if (v.is_objective && (best == nullptr || v.score > best->score)) best = &v;
  }
  out.sentence = best != nullptr ? best->sentence : sentences.front();
  return out;
}

std::span<const VerbForms> reporting_verbs() { return kReportingVerbs; }

std::span<const std::string_view> subject_patterns() { return kSubjectPatterns; }

std::string citation_tag(const PaperRecord& paper) {
  std::string family = "Anonymous";
  if (!paper.authors.empty()) {
    std::string_view first = text::trim(paper.authors.front());
    std::size_t space = first.find_last_of(" \t");
    std::string_view last = space == std::string_view::npos ? first : first.substr(space + 1);
    if (!last.empty()) family = std::string(last);
  }
  std::string tag = family;
  if (paper.authors.size() > 1) tag += " et al.";
  tag += " (" + std::to_string(paper.year) + ")";
  return tag;
}

AlignedSentence align_subject_tense(std::string_view sentence,
                                    const PaperRecord& paper) {
  AlignedSentence out;
  out.citation_tag = citation_tag(paper);
  sentence = text::trim(sentence);
  std::size_t subject = match_subject(sentence);
  if (subject == 0) {
    out.sentence = out.citation_tag + ": " + std::string(sentence);
    return out;
  }

  std::string rest(sentence.substr(subject));
  // Only a word directly after whitespace counts as the following verb.
  std::size_t start = 0;
  while (start < rest.size() && (rest[start] == ' ' || rest[start] == '\t')) ++start;
  if (start > 0) {
    std::size_t end = start;
    while (end < rest.size() && std::isalpha(static_cast<unsigned char>(rest[end]))) ++end;
    if (end > start && (end == rest.size() || !is_alnum(rest[end]))) {
      if (const VerbForms* verb = find_verb(std::string_view(rest).substr(start, end - start))) {
        std::string past(verb->past);
        if (std::isupper(static_cast<unsigned char>(rest[start])))
          past[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(past[0])));
        rest.replace(start, end - start, past);
      }
    }
  }
  out.sentence = out.citation_tag + rest;
  return out;
}

SurveyCard build_survey_card(Direction direction, std::string label,
                             std::string general,
                             std::vector<PaperSummary> summaries) {
  if (text::trim(label).empty())
    throw InternalError("survey card: empty topic label");
  if (text::split_sentences(general).size() != 1 || !is_terminator(general.back()))
    throw InternalError("survey card: general sentence must be one terminated sentence: '" +
                        general + "'");
  if (summaries.empty() || summaries.size() > 5)
    throw InternalError("survey card: expected 1 to 5 paper summaries");
  for (const PaperSummary& s : summaries) {
    if (s.citation_tag.empty() || !s.sentence.starts_with(s.citation_tag))
      throw InternalError("survey card: summary for '" + s.paper_id +
                          "' does not start with its citation tag");
  }
  SurveyCard card;
  card.direction = direction;
  card.topic_label = std::move(label);
  card.general_sentence = std::move(general);
  card.paper_summaries = std::move(summaries);
  return card;
}

}  // namespace ideareader::survey
