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

#include "ideareader/embedding.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "http_client.h"
#include "ideareader/errors.h"

namespace ideareader::embedding {
namespace {

constexpr double kZeroNorm = 1e-12;

EmbeddingMatrix parse_provider_vectors(const nlohmann::json& body,
                                       std::size_t expected_rows,
                                       std::size_t expected_dim) {
  using Kind = ProviderError::Kind;
  if (!body.is_object() || !body.contains("vectors") ||
      !body["vectors"].is_array())
    throw ProviderError(Kind::kMalformedBody, "expected {\"vectors\": [...]}");
  const nlohmann::json& vectors = body["vectors"];
  if (vectors.size() != expected_rows)
    throw ProviderError(Kind::kRowCountMismatch,
                        "sent " + std::to_string(expected_rows) +
                            " texts, received " +
                            std::to_string(vectors.size()) + " vectors");
  EmbeddingMatrix out;
  out.vectors.resize(static_cast<Eigen::Index>(expected_rows),
                     static_cast<Eigen::Index>(expected_dim));
  for (std::size_t i = 0; i < expected_rows; ++i) {
    const nlohmann::json& row = vectors[i];
    if (!row.is_array())
      throw ProviderError(Kind::kMalformedBody, "vector is not an array");
    if (row.size() != expected_dim)
      throw ProviderError(Kind::kDimensionMismatch,
                          "expected dimension " + std::to_string(expected_dim) +
                              ", got " + std::to_string(row.size()));
    for (std::size_t j = 0; j < expected_dim; ++j) {
      if (!row[j].is_number())
        throw ProviderError(Kind::kMalformedBody, "non-numeric vector entry");
      double v = row[j].get<double>();
      if (!std::isfinite(v))
        throw ProviderError(Kind::kMalformedBody, "non-finite vector entry");
      out.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kTfidfDense: return "tfidf_dense";
    case Stage::kProvider: return "provider";
    case Stage::kFused: return "fused";
    case Stage::kPropagated: return "propagated";
  }
  return "unknown";
}

std::optional<std::size_t> EmbeddingMatrix::row_of(std::string_view id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

void normalize_rows(Eigen::MatrixXd& m, std::vector<bool>& zero_rows) {
  zero_rows.assign(static_cast<std::size_t>(m.rows()), false);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double norm = m.row(i).norm();
    if (norm < kZeroNorm) {
      m.row(i).setZero();
      zero_rows[static_cast<std::size_t>(i)] = true;
    } else {
      m.row(i) /= norm;
    }
  }
}

EmbeddingMatrix reduce_dense(std::span<const PaperId> ids,
                             std::span<const SparseVector> rows,
                             std::size_t vocabulary_size, std::size_t d) {
  if (ids.size() != rows.size())
    throw std::invalid_argument("reduce_dense: ids and rows differ in length");
  if (rows.size() < 2)
    throw std::invalid_argument("reduce_dense: needs at least two rows");
  if (d == 0) throw std::invalid_argument("reduce_dense: d must be positive");

  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(vocabulary_size));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& [col, w] : rows[static_cast<std::size_t>(i)].entries) {
      if (col >= vocabulary_size)
        throw std::invalid_argument("reduce_dense: column out of range");
      a(i, col) = w;
    }
  }
  if (a.isZero(0.0)) throw DataError("reduce_dense: all-zero matrix");

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const Eigen::Index rank = svd.rank();
  const Eigen::Index width = std::min<Eigen::Index>(static_cast<Eigen::Index>(d), rank);

  EmbeddingMatrix out;
  out.ids.assign(ids.begin(), ids.end());
  out.stage = Stage::kTfidfDense;
  out.vectors = svd.matrixU().leftCols(width) * sigma.head(width).asDiagonal();
  for (Eigen::Index c = 0; c < width; ++c) {
    Eigen::Index pivot = 0;
    out.vectors.col(c).cwiseAbs().maxCoeff(&pivot);
    if (out.vectors(pivot, c) < 0) out.vectors.col(c) *= -1.0;
  }
  normalize_rows(out.vectors, out.zero_rows);
  return out;
}

EmbeddingMatrix fetch_dense_embeddings(const ProviderEndpoint& endpoint,
                                       std::span<const PaperId> ids,
                                       std::span<const std::string> texts,
                                       const TfidfModel& fallback_model,
                                       std::size_t fallback_dim) {
  if (ids.size() != texts.size())
    throw std::invalid_argument("fetch_dense_embeddings: ids/texts mismatch");

  if (!endpoint.enabled()) {
    std::vector<SparseVector> rows;
    rows.reserve(texts.size());
    for (const std::string& t : texts) rows.push_back(fallback_model.embed(t));
    EmbeddingMatrix out =
        reduce_dense(ids, rows, fallback_model.vocabulary_size(), fallback_dim);
    out.stage = Stage::kProvider;
    out.fallback = true;
    return out;
  }

  const std::size_t batch = std::max<std::size_t>(1, endpoint.batch_size);
  EmbeddingMatrix out;
  out.ids.assign(ids.begin(), ids.end());
  out.stage = Stage::kProvider;
  out.vectors.resize(static_cast<Eigen::Index>(texts.size()),
                     static_cast<Eigen::Index>(endpoint.expected_dim));
  for (std::size_t start = 0; start < texts.size(); start += batch) {
    std::size_t count = std::min(batch, texts.size() - start);
    nlohmann::json body;
    body["texts"] = nlohmann::json::array();
    for (std::size_t i = 0; i < count; ++i) body["texts"].push_back(texts[start + i]);
    nlohmann::json response = internal::post_json(endpoint, "/embed", body);
    EmbeddingMatrix part =
        parse_provider_vectors(response, count, endpoint.expected_dim);
    out.vectors.middleRows(static_cast<Eigen::Index>(start),
                           static_cast<Eigen::Index>(count)) = part.vectors;
  }
  normalize_rows(out.vectors, out.zero_rows);
  return out;
}

EmbeddingMatrix fuse_embeddings(const EmbeddingMatrix& a,
                                const EmbeddingMatrix& b) {
  if (a.ids != b.ids)
    throw std::invalid_argument("fuse_embeddings: id lists differ");
  EmbeddingMatrix out;
  out.ids = a.ids;
  out.stage = Stage::kFused;
  out.fallback = a.fallback || b.fallback;
  out.vectors.resize(static_cast<Eigen::Index>(a.rows()),
                     a.vectors.cols() + b.vectors.cols());
  out.vectors << a.vectors, b.vectors;
  normalize_rows(out.vectors, out.zero_rows);
  return out;
}

EmbeddingMatrix spectral_propagate(const graph::CitationGraph& graph,
                                   const EmbeddingMatrix& emb,
                                   const PropagationOptions& options) {
  if (options.mix < 0.0 || options.mix > 1.0)
    throw std::invalid_argument("spectral_propagate: mix outside [0, 1]");
  if (options.steps < 0)
    throw std::invalid_argument("spectral_propagate: negative steps");

  const std::size_t n = emb.rows();
  std::vector<int> local(graph.node_count(), -1);
  std::vector<graph::NodeIndex> nodes(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<graph::NodeIndex> i = graph.index_of(emb.ids[k]);
    if (!i) throw UnknownPaperError(emb.ids[k]);
    nodes[k] = *i;
    local[*i] = static_cast<int>(k);
  }

  // Undirected neighborhoods inside the induced subgraph, self loop included.
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t k = 0; k < n; ++k) {
    nbrs[k].push_back(k);
    for (auto list : {graph.out_neighbors(nodes[k]), graph.in_neighbors(nodes[k])}) {
      for (graph::NodeIndex v : list) {
        if (local[v] >= 0) nbrs[k].push_back(static_cast<std::size_t>(local[v]));
      }
    }
    std::sort(nbrs[k].begin(), nbrs[k].end());
    nbrs[k].erase(std::unique(nbrs[k].begin(), nbrs[k].end()), nbrs[k].end());
  }

  Eigen::MatrixXd r = emb.vectors;
  Eigen::MatrixXd smoothed(r.rows(), r.cols());
  for (int step = 0; step < options.steps; ++step) {
    for (std::size_t k = 0; k < n; ++k) {
      auto row = smoothed.row(static_cast<Eigen::Index>(k));
      row.setZero();
      for (std::size_t j : nbrs[k]) row += r.row(static_cast<Eigen::Index>(j));
      row /= static_cast<double>(nbrs[k].size());
    }
    r = options.mix * r + (1.0 - options.mix) * smoothed;
  }

  EmbeddingMatrix out;
  out.ids = emb.ids;
  out.stage = Stage::kPropagated;
  out.fallback = emb.fallback;
  out.vectors = std::move(r);
  normalize_rows(out.vectors, out.zero_rows);
  return out;
}

}  // namespace ideareader::embedding
