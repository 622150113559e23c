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

#include "ideareader/tfidf.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "ideareader/errors.h"
#include "ideareader/text.h"

namespace ideareader::embedding {

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

TfidfModel TfidfModel::fit(std::span<const std::string> documents) {
  if (documents.empty())
    throw std::invalid_argument("fit_tfidf: no documents");

  std::map<std::string, std::size_t, std::less<>> df;
  for (const std::string& doc : documents) {
    std::vector<std::string> tokens = text::tokenize(doc);
    std::set<std::string> distinct(tokens.begin(), tokens.end());
    for (const std::string& t : distinct) ++df[t];
  }
  if (df.empty())
    throw DataError("fit_tfidf: every document is empty after tokenization");

  TfidfModel model;
  model.document_count_ = documents.size();
  const double n = static_cast<double>(documents.size());
  std::uint32_t column = 0;
  for (const auto& [token, count] : df) {
    model.vocabulary_.emplace(token, column++);
    model.df_.push_back(count);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return model;
}

std::optional<std::uint32_t> TfidfModel::column(std::string_view token) const {
  auto it = vocabulary_.find(token);
  if (it == vocabulary_.end()) return std::nullopt;
  return it->second;
}

std::size_t TfidfModel::document_frequency(std::string_view token) const {
  std::optional<std::uint32_t> c = column(token);
  return c ? df_[*c] : 0;
}

double TfidfModel::idf(std::string_view token) const {
  std::optional<std::uint32_t> c = column(token);
  if (c) return idf_[*c];
  return std::log(1.0 + static_cast<double>(document_count_)) + 1.0;
}

SparseVector TfidfModel::embed(std::string_view document) const {
  std::map<std::uint32_t, double> counts;
  for (const std::string& token : text::tokenize(document)) {
    std::optional<std::uint32_t> c = column(token);
    if (c) counts[*c] += 1.0;
  }
  SparseVector v;
  double norm2 = 0.0;
  for (const auto& [c, count] : counts) {
    double w = count * idf_[c];
    v.entries.emplace_back(c, w);
    norm2 += w * w;
  }
  if (norm2 == 0.0) return {};
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& entry : v.entries) entry.second *= inv;
  return v;
}

}  // namespace ideareader::embedding
