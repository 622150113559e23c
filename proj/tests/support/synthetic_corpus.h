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

#ifndef IDEAREADER_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
#define IDEAREADER_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ideareader/corpus.h"

namespace ideareader::testing {

struct SyntheticOptions {
  std::uint64_t seed = 7;
  int reference_topics = 4;
  int papers_per_reference_topic = 40;
  int direct_references_per_topic = 6;
  int citation_topics = 3;
  int papers_per_citation_topic = 30;
  int direct_citers_per_topic = 8;
  int background_papers = 249;
  // Probability that a paper also cites one paper of another topic.
  double cross_topic_rate = 0.05;
};

// A corpus with planted topics around one target paper "T". Reference-side
// topics are named "ref-<k>", citation-side topics "cit-<k>", background
// papers "bg-<k>".
struct SyntheticCorpus {
  std::vector<PaperRecord> records;
  std::map<PaperId, std::string> topic_of;
  PaperId target = "T";
};

SyntheticCorpus make_synthetic_corpus(const SyntheticOptions& options = {});

// Writes records in the corpus line format.
void write_jsonl(const std::vector<PaperRecord>& records, std::ostream& out);

}  // namespace ideareader::testing

#endif  // IDEAREADER_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
