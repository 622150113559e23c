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

#include "ideareader/pipeline.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ideareader/errors.h"
#include "json.hpp"
#include "provenance.h"
#include "stub_provider.h"
#include "synthetic_corpus.h"

namespace ideareader::service {
namespace {

const std::filesystem::path kData = IDEAREADER_TEST_DATA_DIR;

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const corpus::CorpusStore& fixture() {
  static const corpus::CorpusStore store = corpus::CorpusStore::ingest(kData / "fixture_corpus.jsonl");
  return store;
}

const corpus::CorpusStore& synthetic() {
  static const corpus::CorpusStore store =
      corpus::CorpusStore::from_records(testing::make_synthetic_corpus().records);
  return store;
}

MachineReadingResult run(const corpus::CorpusStore& store, const std::string& target,
                         const PipelineConfig& config = {}) {
  auto graph = graph::build_graph(store);
  return run_pipeline(store, graph, target, config, "1970-01-01T00:00:00Z");
}

void expect_structure(const MachineReadingResult& r, const PipelineConfig& config) {
  EXPECT_LE(r.references.candidates.size(), config.candidate_limit);
  EXPECT_LE(r.citations.candidates.size(), config.candidate_limit);
  for (const auto* cards : {&r.document.topics_inspiring, &r.document.topics_influenced}) {
    EXPECT_LE(cards->size(), static_cast<std::size_t>(config.k_max));
    for (const auto& card : *cards) {
      EXPECT_FALSE(card.topic_label.empty());
      EXPECT_GE(card.paper_summaries.size(), 1u);
      EXPECT_LE(card.paper_summaries.size(), 5u);
    }
  }
}

TEST(Pipeline, FixtureMatchesGoldenDocuments) {
  auto r = run(fixture(), "T");
  EXPECT_EQ(r.bytes, read(kData / "golden_result.json"));
  EXPECT_EQ(r.report_html, read(kData / "golden_report.html"));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Pipeline, RunsAreByteIdentical) {
  auto a = run(fixture(), "T");
  auto b = run(fixture(), "T");
  EXPECT_EQ(a.bytes, b.bytes);
  EXPECT_EQ(a.report_html, b.report_html);
}

TEST(Pipeline, SyntheticCorpusStructure) {
  PipelineConfig config;
  auto r = run(synthetic(), "T", config);
  expect_structure(r, config);
  EXPECT_FALSE(r.document.topics_inspiring.empty());
  EXPECT_FALSE(r.document.topics_influenced.empty());
  EXPECT_EQ(r.references.candidates.size(), 100u);
  EXPECT_EQ(r.document.config_digest, config.digest());
  EXPECT_EQ(report::parse_result(r.bytes), r.document);
}

TEST(Pipeline, SummariesTraceToSources) {
  auto r = run(fixture(), "T");
  const auto& store = fixture();
  for (const auto* cards : {&r.document.topics_inspiring, &r.document.topics_influenced})
    for (const auto& card : *cards)
      for (const auto& s : card.paper_summaries)
        EXPECT_TRUE(testing::traces_to_source(s.sentence, s.citation_tag, *store.find(s.paper_id)))
            << s.sentence;
}

TEST(Pipeline, TargetWithoutReferences) {
  // The oldest paper of a reference topic cites nothing but is cited.
  auto r = run(fixture(), "r0-0");
  EXPECT_TRUE(r.document.topics_inspiring.empty());
  EXPECT_TRUE(r.document.tree.reference_branch.empty());
  EXPECT_FALSE(r.document.topics_influenced.empty());
  EXPECT_NE(r.report_html.find("No referenced papers found."), std::string::npos);
}

TEST(Pipeline, IsolatedTargetYieldsEmptyBranches) {
  std::vector<PaperRecord> records(2);
  records[0] = {"solo", "Lonely paper", "Nothing cites it.", 2000, {"A B"}, "", {}};
  records[1] = {"other", "Other paper", "Unrelated.", 2001, {"C D"}, "", {}};
  auto store = corpus::CorpusStore::from_records(records);
  auto r = run(store, "solo");
  EXPECT_TRUE(r.document.topics_inspiring.empty());
  EXPECT_TRUE(r.document.topics_influenced.empty());
}

TEST(Pipeline, FewCandidatesDegradeToOneTopic) {
  std::vector<PaperRecord> records = {
      {"T", "Target", "We propose a target.", 2010, {"A B"}, "", {"x", "y"}},
      {"x", "Graph kernels", "We study graph kernels.", 2005, {"C D"}, "", {}},
      {"y", "Graph spectra", "We describe graph spectra.", 2006, {"E F", "G H"}, "", {}},
      {"z", "Citing work", "This paper builds on the target.", 2012, {"I J"}, "", {"T"}}};
  auto r = run(corpus::CorpusStore::from_records(records), "T");
  ASSERT_EQ(r.document.topics_inspiring.size(), 1u);
  EXPECT_EQ(r.document.topics_inspiring[0].topic_label, kDegradedTopicLabel);
  EXPECT_EQ(r.document.topics_inspiring[0].paper_summaries.size(), 2u);
  EXPECT_TRUE(r.references.degraded);
  ASSERT_EQ(r.document.topics_influenced.size(), 1u);
  EXPECT_EQ(r.document.topics_influenced[0].paper_summaries[0].sentence,
            "J (2012) builds on the target.");
}

TEST(Pipeline, StoreAndGraphUntouched) {
  const auto& store = fixture();
  auto before = store.papers();
  auto graph = graph::build_graph(store);
  auto edges = graph.edge_count();
  run_pipeline(store, graph, "T", PipelineConfig{});
  EXPECT_EQ(store.papers(), before);
  EXPECT_EQ(graph.edge_count(), edges);
}

TEST(Pipeline, UnknownTarget) {
  EXPECT_THROW(run(fixture(), "missing"), UnknownPaperError);
}

TEST(Pipeline, ConfigChangesDigestAndCandidateCap) {
  PipelineConfig config;
  config.candidate_limit = 10;
  config.topic_size = 2;
  auto r = run(synthetic(), "T", config);
  EXPECT_EQ(r.references.candidates.size(), 10u);
  for (const auto& card : r.document.topics_inspiring) EXPECT_LE(card.paper_summaries.size(), 2u);
  EXPECT_NE(r.document.config_digest, PipelineConfig{}.digest());
}

TEST(Pipeline, ProvidersUsedAndFailuresFallBack) {
  testing::StubProvider stub;
  stub.on("/embed", [](const std::string& body) {
    auto texts = nlohmann::json::parse(body)["texts"];
    nlohmann::json vectors = nlohmann::json::array();
    for (const auto& t : texts) {
      auto s = t.get<std::string>();
      vectors.push_back({1.0, static_cast<double>(s.size() % 7), static_cast<double>(s[0] % 5)});
    }
    return std::make_pair(200, nlohmann::json{{"vectors", vectors}}.dump());
  });
  stub.on("/summarize", [](const std::string&) {
    return std::make_pair(200, nlohmann::json{{"summary", "Stub summary. Second."}}.dump());
  });
  stub.on("/classify", [](const std::string&) { return std::make_pair(500, std::string("oops")); });
  stub.start();

  PipelineConfig config;
  config.providers.embed_url = stub.base_url();
  config.providers.embed_dim = 3;
  config.providers.summarize_url = stub.base_url();
  config.providers.classify_url = stub.base_url();
  auto r = run(fixture(), "T", config);
  EXPECT_FALSE(stub.requests("/embed").empty());
  ASSERT_FALSE(r.document.topics_inspiring.empty());
  EXPECT_EQ(r.document.topics_inspiring[0].general_sentence, "Stub summary.");
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("classifier"), std::string::npos);

  config.providers.embed_dim = 4;  // every embed response now mismatches
  auto degraded = run(fixture(), "T", config);
  EXPECT_NE(degraded.warnings[0].find("embedding"), std::string::npos);
}

}  // namespace
}  // namespace ideareader::service
