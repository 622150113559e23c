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

#include "ideareader/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "ideareader/errors.h"
#include "ideareader/text.h"
#include "json.hpp"

namespace ideareader::corpus {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw CorpusError(std::string("missing field '") + key + "'", line);
  return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
  const json& v = require(obj, key, line);
  if (!v.is_string())
    throw CorpusError(std::string("field '") + key + "' must be a string",
                      line);
  return v.get<std::string>();
}

std::vector<std::string> require_string_array(const json& obj, const char* key,
                                              std::size_t line) {
  const json& v = require(obj, key, line);
  if (!v.is_array())
    throw CorpusError(std::string("field '") + key + "' must be an array",
                      line);
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_string())
      throw CorpusError(
          std::string("field '") + key + "' must contain only strings", line);
    out.push_back(item.get<std::string>());
  }
  return out;
}

PaperRecord parse_record(std::string_view text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CorpusError(std::string("malformed record: ") + e.what(), line);
  }
  if (!obj.is_object()) throw CorpusError("record is not an object", line);

  PaperRecord rec;
  rec.id = require_string(obj, "id", line);
  if (rec.id.empty()) throw CorpusError("field 'id' must be non-empty", line);
  rec.title = require_string(obj, "title", line);
  rec.abstract = require_string(obj, "abstract", line);
  const json& year = require(obj, "year", line);
  if (!year.is_number_integer())
    throw CorpusError("field 'year' must be an integer", line);
  rec.year = year.get<int>();
  rec.authors = require_string_array(obj, "authors", line);
  rec.venue = require_string(obj, "venue", line);
  rec.reference_ids = require_string_array(obj, "references", line);
  return rec;
}

json to_json(const PaperRecord& rec) {
  return json{{"id", rec.id},           {"title", rec.title},
              {"abstract", rec.abstract}, {"year", rec.year},
              {"authors", rec.authors},   {"venue", rec.venue},
              {"references", rec.reference_ids}};
}

// Accumulates records under the first-wins rule and strips self-edges and
// repeated reference ids; dangling ids are removed once all records are in.
class Builder {
 public:
  void add(PaperRecord rec) {
    ++stats_.records_read;
    if (papers_.contains(rec.id)) {
      ++stats_.duplicates_dropped;
      return;
    }
    std::vector<PaperId> refs;
    std::set<std::string> seen;
    for (PaperId& ref : rec.reference_ids) {
      if (ref == rec.id) {
        ++stats_.self_edges_dropped;
        continue;
      }
      if (!seen.insert(ref).second) continue;
      refs.push_back(std::move(ref));
    }
    rec.reference_ids = std::move(refs);
    PaperId id = rec.id;
    papers_.emplace(std::move(id), std::move(rec));
  }

  std::pair<std::map<PaperId, PaperRecord, std::less<>>, IngestionStats>
  finish() && {
    if (papers_.empty()) throw CorpusError("empty corpus");
    for (auto& [id, rec] : papers_) {
      std::size_t before = rec.reference_ids.size();
      std::erase_if(rec.reference_ids, [this](const PaperId& ref) {
        return !papers_.contains(ref);
      });
      stats_.dangling_dropped += before - rec.reference_ids.size();
    }
    return {std::move(papers_), stats_};
  }

 private:
  std::map<PaperId, PaperRecord, std::less<>> papers_;
  IngestionStats stats_;
};

}  // namespace

CorpusStore CorpusStore::ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read corpus file '" + path.string() + "'");
  return ingest(in);
}

CorpusStore CorpusStore::ingest(std::istream& in) {
  Builder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    builder.add(parse_record(line, line_no));
  }
  if (in.bad()) throw CorpusError("read error after line " + std::to_string(line_no));
  CorpusStore store;
  std::tie(store.papers_, store.stats_) = std::move(builder).finish();
  return store;
}

CorpusStore CorpusStore::from_records(std::vector<PaperRecord> records) {
  Builder builder;
  for (PaperRecord& rec : records) {
    if (rec.id.empty()) throw CorpusError("paper id must be non-empty");
    builder.add(std::move(rec));
  }
  CorpusStore store;
  std::tie(store.papers_, store.stats_) = std::move(builder).finish();
  return store;
}

void CorpusStore::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "papers.jsonl", std::ios::binary);
    if (!out) throw DataError("cannot write store to '" + dir.string() + "'");
    for (const auto& [id, rec] : papers_) out << to_json(rec).dump() << '\n';
  }
  json stats{{"records_read", stats_.records_read},
             {"duplicates_dropped", stats_.duplicates_dropped},
             {"dangling_dropped", stats_.dangling_dropped},
             {"self_edges_dropped", stats_.self_edges_dropped}};
  std::ofstream out(dir / "stats.json", std::ios::binary);
  if (!out) throw DataError("cannot write store to '" + dir.string() + "'");
  out << stats.dump(2) << '\n';
}

CorpusStore CorpusStore::load(const std::filesystem::path& dir) {
  CorpusStore store = ingest(dir / "papers.jsonl");
  std::ifstream in(dir / "stats.json");
  if (!in) return store;
  try {
    json stats = json::parse(in);
    store.stats_.records_read = stats.at("records_read").get<std::size_t>();
    store.stats_.duplicates_dropped =
        stats.at("duplicates_dropped").get<std::size_t>();
    store.stats_.dangling_dropped =
        stats.at("dangling_dropped").get<std::size_t>();
    store.stats_.self_edges_dropped =
        stats.at("self_edges_dropped").get<std::size_t>();
  } catch (const json::exception& e) {
    throw CorpusError("malformed stats.json in '" + dir.string() +
                      "': " + e.what());
  }
  return store;
}

const PaperRecord* CorpusStore::find(std::string_view id) const {
  auto it = papers_.find(id);
  return it == papers_.end() ? nullptr : &it->second;
}

// Score = number of distinct query tokens present in the title. Ties go to
// the more recent paper, then to the smaller id. Zero scores never match.
std::vector<const PaperRecord*> CorpusStore::search(std::string_view query,
                                                    std::size_t limit) const {
  std::vector<std::string> tokens = text::split_words(query);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  if (tokens.empty() || limit == 0) return {};

  std::vector<std::pair<std::size_t, const PaperRecord*>> hits;
  for (const auto& [id, rec] : papers_) {
    std::vector<std::string> words = text::split_words(rec.title);
    std::set<std::string> title_words(words.begin(), words.end());
    std::size_t score = 0;
    for (const std::string& t : tokens) score += title_words.count(t);
    if (score > 0) hits.emplace_back(score, &rec);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if (a.second->year != b.second->year) return a.second->year > b.second->year;
    return a.second->id < b.second->id;
  });
  if (hits.size() > limit) hits.resize(limit);
  std::vector<const PaperRecord*> out;
  out.reserve(hits.size());
  for (const auto& hit : hits) out.push_back(hit.second);
  return out;
}

}  // namespace ideareader::corpus
