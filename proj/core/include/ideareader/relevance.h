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

#ifndef IDEAREADER_RELEVANCE_H_
#define IDEAREADER_RELEVANCE_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ideareader/clustering.h"
#include "ideareader/corpus.h"

namespace ideareader::relevance {

// total = cosine + lambda * citation_bonus, with citation_bonus = 1 / hop.
struct RelevanceScore {
  PaperId paper_id;
  double cosine = 0.0;
  double citation_bonus = 0.0;
  double total = 0.0;
};

RelevanceScore score_relevance(const PaperId& paper_id,
                               std::span<const double> target_vec,
                               std::span<const double> paper_vec, int hop,
                               double lambda = 0.5);

struct RankedCluster {
  int cluster = 0;
  // Descending total, then descending PageRank, then ascending id.
  std::vector<RelevanceScore> members;
  // Prefix of members, at most the configured topic size.
  std::vector<RelevanceScore> selected;
};

// One RankedCluster per cluster index in [0, k). Throws std::invalid_argument
// when an assigned id has no score or no PageRank value.
std::vector<RankedCluster> rank_within_cluster(
    const clustering::ClusterAssignment& assignment,
    const std::map<PaperId, RelevanceScore>& scores,
    const std::map<PaperId, double>& pagerank, std::size_t topic_size = 5);

std::vector<PaperId> select_topic_papers(const RankedCluster& ranked,
                                         std::size_t k = 5);

}  // namespace ideareader::relevance

#endif  // IDEAREADER_RELEVANCE_H_
