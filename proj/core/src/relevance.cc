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

#include "ideareader/relevance.h"

#include <algorithm>
#include <stdexcept>

namespace ideareader::relevance {

RelevanceScore score_relevance(const PaperId& paper_id,
                               std::span<const double> target_vec,
                               std::span<const double> paper_vec, int hop,
                               double lambda) {
  if (hop < 1) throw std::invalid_argument("score_relevance: hop must be >= 1");
  if (target_vec.size() != paper_vec.size())
    throw std::invalid_argument("score_relevance: dimension mismatch");
  RelevanceScore score;
  score.paper_id = paper_id;
  for (std::size_t i = 0; i < target_vec.size(); ++i)
    score.cosine += target_vec[i] * paper_vec[i];
  score.citation_bonus = 1.0 / static_cast<double>(hop);
  score.total = score.cosine + lambda * score.citation_bonus;
  return score;
}

std::vector<RankedCluster> rank_within_cluster(
    const clustering::ClusterAssignment& assignment,
    const std::map<PaperId, RelevanceScore>& scores,
    const std::map<PaperId, double>& pagerank, std::size_t topic_size) {
  std::vector<RankedCluster> clusters(static_cast<std::size_t>(assignment.k));
  for (int c = 0; c < assignment.k; ++c) clusters[static_cast<std::size_t>(c)].cluster = c;

  auto rank_of = [&](const PaperId& id) {
    auto it = pagerank.find(id);
    if (it == pagerank.end())
      throw std::invalid_argument("rank_within_cluster: no PageRank for '" + id + "'");
    return it->second;
  };

  for (std::size_t i = 0; i < assignment.ids.size(); ++i) {
    const PaperId& id = assignment.ids[i];
    auto it = scores.find(id);
    if (it == scores.end())
      throw std::invalid_argument("rank_within_cluster: no score for '" + id + "'");
    rank_of(id);
    clusters[static_cast<std::size_t>(assignment.labels[i])].members.push_back(it->second);
  }

  for (RankedCluster& cluster : clusters) {
    std::sort(cluster.members.begin(), cluster.members.end(),
              [&](const RelevanceScore& a, const RelevanceScore& b) {
                if (a.total != b.total) return a.total > b.total;
                double pa = rank_of(a.paper_id);
                double pb = rank_of(b.paper_id);
                if (pa != pb) return pa > pb;
                return a.paper_id < b.paper_id;
              });
    std::size_t take = std::min(topic_size, cluster.members.size());
    cluster.selected.assign(cluster.members.begin(),
                            cluster.members.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return clusters;
}

std::vector<PaperId> select_topic_papers(const RankedCluster& ranked,
                                         std::size_t k) {
  std::vector<PaperId> ids;
  for (std::size_t i = 0; i < std::min(k, ranked.members.size()); ++i)
    ids.push_back(ranked.members[i].paper_id);
  return ids;
}

}  // namespace ideareader::relevance
