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

#ifndef IDEAREADER_CITATION_GRAPH_H_
#define IDEAREADER_CITATION_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ideareader/corpus.h"

namespace ideareader {

// Which side of the target a candidate set lives on.
enum class Direction { kReferences, kCitations };

std::string_view to_string(Direction d);

}  // namespace ideareader

namespace ideareader::graph {

using NodeIndex = std::uint32_t;

// Directed citation graph. Nodes are indexed in ascending id order, so every
// adjacency list, being sorted by index, is also sorted by id. An edge u -> v
// means u references v; in_neighbors is the exact transpose of out_neighbors.
class CitationGraph {
 public:
  CitationGraph() = default;

  // Self-loops and repeated edges are dropped; both endpoints must be nodes.
  static CitationGraph from_edges(
      std::vector<PaperId> nodes,
      const std::vector<std::pair<PaperId, PaperId>>& edges);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::optional<NodeIndex> index_of(std::string_view id) const;
  const PaperId& id_at(NodeIndex i) const { return ids_[i]; }
  const std::vector<PaperId>& ids() const { return ids_; }

  std::span<const NodeIndex> out_neighbors(NodeIndex i) const {
    return out_[i];
  }
  std::span<const NodeIndex> in_neighbors(NodeIndex i) const { return in_[i]; }
  std::span<const NodeIndex> neighbors(NodeIndex i, Direction d) const {
    return d == Direction::kReferences ? out_neighbors(i) : in_neighbors(i);
  }

  // Id-level views; throw UnknownPaperError for unknown ids.
  std::vector<PaperId> references(std::string_view id) const;
  std::vector<PaperId> citations(std::string_view id) const;

 private:
  NodeIndex require(std::string_view id) const;

  std::vector<PaperId> ids_;
  std::vector<std::vector<NodeIndex>> out_;
  std::vector<std::vector<NodeIndex>> in_;
  std::size_t edge_count_ = 0;
};

CitationGraph build_graph(const corpus::CorpusStore& store);

// Papers reached from a target by level-wise expansion in one direction.
struct ExpandedSet {
  Direction direction = Direction::kReferences;
  // id -> minimum hop distance from the target (>= 1).
  std::map<PaperId, int> members;
  // True iff expansion stopped because a level produced no new papers.
  bool exhausted = false;
};

// Expands whole hop levels until strictly more than `threshold` papers have
// been collected, a level adds nothing, or `max_hops` levels are done.
ExpandedSet expand_candidates(const CitationGraph& graph,
                              std::string_view target, Direction direction,
                              std::size_t threshold = 100, int max_hops = 5);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;
  int max_iter = 200;
};

// PageRank on the subgraph induced by `nodes`, edges directed as in the
// graph. Dangling mass is spread uniformly over `nodes`. Iterates until the
// L1 change drops below tol or max_iter sweeps have run.
std::map<PaperId, double> pagerank(const CitationGraph& graph,
                                   std::span<const PaperId> nodes,
                                   const PageRankOptions& options = {});

struct Candidate {
  PaperId id;
  double pagerank = 0.0;
  int hop = 0;

  bool operator==(const Candidate&) const = default;
};

struct CandidateSet {
  Direction direction = Direction::kReferences;
  // Descending PageRank, ties by ascending id.
  std::vector<Candidate> papers;
};

CandidateSet select_top_candidates(const ExpandedSet& expanded,
                                   const std::map<PaperId, double>& scores,
                                   std::size_t k = 100);

}  // namespace ideareader::graph

#endif  // IDEAREADER_CITATION_GRAPH_H_
