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

#ifndef IDEAREADER_CORPUS_H_
#define IDEAREADER_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ideareader {

// Paper ids are opaque, case-sensitive strings.
using PaperId = std::string;

struct PaperRecord {
  PaperId id;
  std::string title;
  std::string abstract;
  int year = 0;
  // Display names; the family name is the last whitespace-separated token.
  std::vector<std::string> authors;
  std::string venue;
  std::vector<PaperId> reference_ids;

  bool operator==(const PaperRecord&) const = default;
};

}  // namespace ideareader

namespace ideareader::corpus {

struct IngestionStats {
  std::size_t records_read = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t dangling_dropped = 0;
  std::size_t self_edges_dropped = 0;

  bool operator==(const IngestionStats&) const = default;
};

// Immutable, validated paper collection. Every reference id resolves to a
// stored paper, reference lists are duplicate-free and contain no self-edges.
class CorpusStore {
 public:
  // Reads line-delimited JSON records. Throws CorpusError on an unreadable
  // path, a malformed line (with its line number) or an empty corpus.
  static CorpusStore ingest(const std::filesystem::path& path);
  static CorpusStore ingest(std::istream& in);

  // Applies the same cleaning rules to in-memory records.
  static CorpusStore from_records(std::vector<PaperRecord> records);

  // Persists the cleaned corpus as <dir>/papers.jsonl plus <dir>/stats.json.
  void save(const std::filesystem::path& dir) const;
  // Loads a directory written by save(); the original ingestion stats are
  // restored from stats.json.
  static CorpusStore load(const std::filesystem::path& dir);

  // nullptr when the id is unknown.
  const PaperRecord* find(std::string_view id) const;

  // Title token-overlap search; see the implementation for the ranking rule.
  std::vector<const PaperRecord*> search(std::string_view query,
                                         std::size_t limit) const;

  const std::map<PaperId, PaperRecord, std::less<>>& papers() const {
    return papers_;
  }
  std::size_t size() const { return papers_.size(); }
  const IngestionStats& stats() const { return stats_; }

 private:
  CorpusStore() = default;

  std::map<PaperId, PaperRecord, std::less<>> papers_;
  IngestionStats stats_;
};

}  // namespace ideareader::corpus

#endif  // IDEAREADER_CORPUS_H_
