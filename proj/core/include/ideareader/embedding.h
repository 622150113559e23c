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

#ifndef IDEAREADER_EMBEDDING_H_
#define IDEAREADER_EMBEDDING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ideareader/citation_graph.h"
#include "ideareader/corpus.h"
#include "ideareader/provider.h"
#include "ideareader/tfidf.h"

namespace ideareader::embedding {

enum class Stage { kTfidfDense, kProvider, kFused, kPropagated };

std::string_view to_string(Stage stage);

// One row per paper. Every row has unit L2 norm, except rows listed in
// zero_rows, which are exactly zero.
struct EmbeddingMatrix {
  std::vector<PaperId> ids;
  Eigen::MatrixXd vectors;
  Stage stage = Stage::kTfidfDense;
  std::vector<bool> zero_rows;
  // Set when a provider-stage matrix came from the offline fallback.
  bool fallback = false;

  std::size_t rows() const { return ids.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(vectors.cols()); }
  std::optional<std::size_t> row_of(std::string_view id) const;
};

// Normalizes every row in place; rows with norm below 1e-12 become zero and
// are flagged.
void normalize_rows(Eigen::MatrixXd& m, std::vector<bool>& zero_rows);

// Rank-d truncated SVD of the stacked TF-IDF rows (rows x vocabulary_size),
// rows re-normalized. The output width is min(d, numerical rank). Column
// signs are fixed so the largest-magnitude entry of each column is positive.
// Needs at least two rows; throws DataError for an all-zero matrix.
EmbeddingMatrix reduce_dense(std::span<const PaperId> ids,
                             std::span<const SparseVector> rows,
                             std::size_t vocabulary_size, std::size_t d = 128);

// Dense text embeddings from the provider (POST {base_url}/embed). Without a
// base URL returns the reduce_dense fallback over `fallback_model`, flagged.
// Provider failures throw ProviderError; callers choose whether to fall back.
EmbeddingMatrix fetch_dense_embeddings(const ProviderEndpoint& endpoint,
                                       std::span<const PaperId> ids,
                                       std::span<const std::string> texts,
                                       const TfidfModel& fallback_model,
                                       std::size_t fallback_dim = 128);

// Same ids in the same order; rows are concatenated and re-normalized.
EmbeddingMatrix fuse_embeddings(const EmbeddingMatrix& a,
                                const EmbeddingMatrix& b);

struct PropagationOptions {
  int steps = 3;
  double mix = 0.5;
};

// Smooths rows over the undirected induced citation subgraph with self
// loops: R <- mix * R + (1 - mix) * P * R, P = D^-1 (A + I), `steps` times,
// then re-normalizes.
EmbeddingMatrix spectral_propagate(const graph::CitationGraph& graph,
                                   const EmbeddingMatrix& emb,
                                   const PropagationOptions& options = {});

}  // namespace ideareader::embedding

#endif  // IDEAREADER_EMBEDDING_H_
