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

#ifndef IDEAREADER_TFIDF_H_
#define IDEAREADER_TFIDF_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ideareader::embedding {

// Sorted (column, weight) pairs. An empty entry list is the zero vector.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool is_zero() const { return entries.empty(); }
  double dot(const SparseVector& other) const;
  bool operator==(const SparseVector&) const = default;
};

// Smoothed-idf TF-IDF over the text::tokenize analyzer:
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
// Columns are assigned in ascending token order.
class TfidfModel {
 public:
  // Throws std::invalid_argument for an empty document list and DataError
  // when no document has a single token left after analysis.
  static TfidfModel fit(std::span<const std::string> documents);

  std::size_t document_count() const { return document_count_; }
  std::size_t vocabulary_size() const { return idf_.size(); }
  const std::map<std::string, std::uint32_t, std::less<>>& vocabulary() const {
    return vocabulary_;
  }

  std::optional<std::uint32_t> column(std::string_view token) const;
  std::size_t document_frequency(std::string_view token) const;
  // idf(t); out-of-vocabulary tokens get the df = 0 value.
  double idf(std::string_view token) const;

  // Raw term count times idf, L2-normalized. Out-of-vocabulary tokens are
  // ignored; a document with no known token maps to the zero vector.
  SparseVector embed(std::string_view document) const;

 private:
  std::size_t document_count_ = 0;
  std::map<std::string, std::uint32_t, std::less<>> vocabulary_;
  std::vector<double> idf_;
  std::vector<std::size_t> df_;
};

inline TfidfModel fit_tfidf(std::span<const std::string> documents) {
  return TfidfModel::fit(documents);
}

inline SparseVector embed_tfidf(const TfidfModel& model,
                                std::string_view document) {
  return model.embed(document);
}

}  // namespace ideareader::embedding

#endif  // IDEAREADER_TFIDF_H_
