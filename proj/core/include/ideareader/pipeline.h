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

#ifndef IDEAREADER_PIPELINE_H_
#define IDEAREADER_PIPELINE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ideareader/citation_graph.h"
#include "ideareader/clustering.h"
#include "ideareader/config.h"
#include "ideareader/corpus.h"
#include "ideareader/relevance.h"
#include "ideareader/tree_report.h"

namespace ideareader::service {

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

// Intermediate state of one side of the pipeline, kept for inspection.
struct BranchDiagnostics {
  Direction direction = Direction::kReferences;
  std::size_t expanded_count = 0;
  bool exhausted = false;
  std::vector<graph::Candidate> candidates;
  clustering::ClusterAssignment assignment;
  std::vector<std::pair<int, double>> silhouettes;
  std::vector<relevance::RankedCluster> clusters;
  // True when too few candidates forced a single "All papers" topic.
  bool degraded = false;
};

inline constexpr std::string_view kDegradedTopicLabel = "All papers";
// Below this many candidates a branch is not clustered.
inline constexpr std::size_t kMinClusterable = 3;

struct MachineReadingResult {
  report::ResultDocument document;
  // serialize_result(document)
  std::string bytes;
  // render_report(document)
  std::string report_html;
  std::vector<StageTiming> timings;
  // Provider fallbacks and similar recoverable events, deduplicated.
  std::vector<std::string> warnings;
  BranchDiagnostics references;
  BranchDiagnostics citations;
};

// Runs candidate selection, embedding, clustering, ranking, survey writing
// and tree assembly for both directions of `target_id`. Throws
// UnknownPaperError for an unknown target. Neither the store nor the graph
// is modified.
MachineReadingResult run_pipeline(const corpus::CorpusStore& store,
                                  const graph::CitationGraph& graph,
                                  std::string_view target_id,
                                  const PipelineConfig& config,
                                  const std::string& generated_at =
                                      reproducible_timestamp());

}  // namespace ideareader::service

#endif  // IDEAREADER_PIPELINE_H_
