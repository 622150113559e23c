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

#include "ideareader/citation_graph.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ideareader/errors.h"

namespace ideareader {

std::string_view to_string(Direction d) {
  return d == Direction::kReferences ? "references" : "citations";
}

}  // namespace ideareader

namespace ideareader::graph {
namespace {

void sort_unique(std::vector<NodeIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CitationGraph CitationGraph::from_edges(
    std::vector<PaperId> nodes,
    const std::vector<std::pair<PaperId, PaperId>>& edges) {
  CitationGraph g;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  g.ids_ = std::move(nodes);
  g.out_.resize(g.ids_.size());
  g.in_.resize(g.ids_.size());
  for (const auto& [from, to] : edges) {
    NodeIndex u = g.require(from);
    NodeIndex v = g.require(to);
    if (u == v) continue;
    g.out_[u].push_back(v);
  }
  for (NodeIndex u = 0; u < g.out_.size(); ++u) {
    sort_unique(g.out_[u]);
    for (NodeIndex v : g.out_[u]) g.in_[v].push_back(u);
    g.edge_count_ += g.out_[u].size();
  }
  // Filling in_ in ascending u keeps every in-list sorted already.
  return g;
}

CitationGraph build_graph(const corpus::CorpusStore& store) {
  std::vector<PaperId> nodes;
  std::vector<std::pair<PaperId, PaperId>> edges;
  nodes.reserve(store.size());
  for (const auto& [id, rec] : store.papers()) {
    nodes.push_back(id);
    for (const PaperId& ref : rec.reference_ids) edges.emplace_back(id, ref);
  }
  return CitationGraph::from_edges(std::move(nodes), edges);
}

std::optional<NodeIndex> CitationGraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex CitationGraph::require(std::string_view id) const {
  std::optional<NodeIndex> i = index_of(id);
  if (!i) throw UnknownPaperError(std::string(id));
  return *i;
}

std::vector<PaperId> CitationGraph::references(std::string_view id) const {
  std::vector<PaperId> out;
  for (NodeIndex v : out_[require(id)]) out.push_back(ids_[v]);
  return out;
}

std::vector<PaperId> CitationGraph::citations(std::string_view id) const {
  std::vector<PaperId> out;
  for (NodeIndex v : in_[require(id)]) out.push_back(ids_[v]);
  return out;
}

ExpandedSet expand_candidates(const CitationGraph& graph,
                              std::string_view target, Direction direction,
                              std::size_t threshold, int max_hops) {
  std::optional<NodeIndex> root = graph.index_of(target);
  if (!root) throw UnknownPaperError(std::string(target));
  if (threshold == 0 || max_hops < 1)
    throw std::invalid_argument("threshold and max_hops must be positive");

  ExpandedSet result;
  result.direction = direction;
  std::vector<int> hop_of(graph.node_count(), 0);
  std::vector<NodeIndex> frontier{*root};
  hop_of[*root] = -1;  // the target is never a member

  for (int hop = 1; hop <= max_hops; ++hop) {
    std::vector<NodeIndex> next;
    for (NodeIndex u : frontier) {
      for (NodeIndex v : graph.neighbors(u, direction)) {
        if (hop_of[v] != 0) continue;
        hop_of[v] = hop;
        next.push_back(v);
      }
    }
    if (next.empty()) {
      result.exhausted = true;
      break;
    }
    for (NodeIndex v : next) result.members.emplace(graph.id_at(v), hop);
    if (result.members.size() > threshold) break;
    frontier = std::move(next);
  }
  return result;
}

std::map<PaperId, double> pagerank(const CitationGraph& graph,
                                   std::span<const PaperId> nodes,
                                   const PageRankOptions& options) {
  if (nodes.empty()) throw std::invalid_argument("pagerank: empty node set");

  std::vector<NodeIndex> members;
  members.reserve(nodes.size());
  for (const PaperId& id : nodes) {
    std::optional<NodeIndex> i = graph.index_of(id);
    if (!i) throw UnknownPaperError(id);
    members.push_back(*i);
  }
  sort_unique(members);
  const std::size_t n = members.size();

  // Local position of every member; -1 marks nodes outside the subgraph.
  std::vector<int> local(graph.node_count(), -1);
  for (std::size_t k = 0; k < n; ++k) local[members[k]] = static_cast<int>(k);

  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (NodeIndex v : graph.out_neighbors(members[k])) {
      if (local[v] >= 0) out[k].push_back(static_cast<std::size_t>(local[v]));
    }
  }

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n), next(n);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (out[k].empty()) dangling += rank[k];
    }
    std::fill(next.begin(), next.end(), (1.0 - d) * inv_n + d * dangling * inv_n);
    for (std::size_t k = 0; k < n; ++k) {
      if (out[k].empty()) continue;
      double share = d * rank[k] / static_cast<double>(out[k].size());
      for (std::size_t j : out[k]) next[j] += share;
    }
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) change += std::abs(next[k] - rank[k]);
    rank.swap(next);
    if (change < options.tol) break;
  }

  double total = 0.0;
  for (double r : rank) total += r;
  std::map<PaperId, double> scores;
  for (std::size_t k = 0; k < n; ++k)
    scores.emplace(graph.id_at(members[k]), rank[k] / total);
  return scores;
}

CandidateSet select_top_candidates(const ExpandedSet& expanded,
                                   const std::map<PaperId, double>& scores,
                                   std::size_t k) {
  CandidateSet result;
  result.direction = expanded.direction;
  result.papers.reserve(expanded.members.size());
  for (const auto& [id, hop] : expanded.members) {
    auto it = scores.find(id);
    if (it == scores.end())
      throw std::invalid_argument("select_top_candidates: no score for '" +
                                  id + "'");
    result.papers.push_back({id, it->second, hop});
  }
  auto by_rank = [](const Candidate& a, const Candidate& b) {
    if (a.pagerank != b.pagerank) return a.pagerank > b.pagerank;
    return a.id < b.id;
  };
  if (result.papers.size() > k) {
    std::partial_sort(result.papers.begin(), result.papers.begin() + k,
                      result.papers.end(), by_rank);
    result.papers.resize(k);
  } else {
    std::sort(result.papers.begin(), result.papers.end(), by_rank);
  }
  return result;
}

}  // namespace ideareader::graph
