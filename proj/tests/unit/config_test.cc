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

#include "ideareader/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "ideareader/errors.h"

namespace ideareader::service {
namespace {

TEST(Config, DefaultsMatchDocumentedValues) {
  PipelineConfig c;
  EXPECT_EQ(c.expansion_threshold, 100u);
  EXPECT_EQ(c.candidate_limit, 100u);
  EXPECT_EQ(c.max_hops, 5);
  EXPECT_EQ(c.pagerank_damping, 0.85);
  EXPECT_EQ(c.topic_size, 5u);
  EXPECT_EQ(c.k_min, 3);
  EXPECT_EQ(c.k_max, 6);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, DigestStableAndSensitive) {
  PipelineConfig a, b;
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_EQ(a.digest().size(), 16u);
  b.seed = 43;
  EXPECT_NE(a.digest(), b.digest());
  EXPECT_EQ(PipelineConfig::from_json(a.canonical_json()), a);
}

TEST(Config, OverlayAndRejections) {
  auto c = PipelineConfig::from_json(R"({"seed": 7, "kernel": "gaussian", "providers": {"timeout_ms": 50}})");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.kernel_kind().type, clustering::KernelKind::Type::kGaussian);
  EXPECT_EQ(c.providers.timeout_ms, 50);
  EXPECT_EQ(c.k_max, 6);
  EXPECT_THROW(PipelineConfig::from_json(R"({"sed": 7})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json(R"({"seed": "7"})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json(R"({"k_min": 5, "k_max": 4})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json(R"({"topic_size": 6})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json(R"({"propagation_mix": 1.5})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json(R"({"kernel": "cubic"})"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json("[1]"), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json("{"), ConfigError);
}

TEST(Config, LoadFromFile) {
  auto path = std::filesystem::temp_directory_path() / "ideareader_config_test.json";
  std::ofstream(path) << R"({"candidate_limit": 50})";
  EXPECT_EQ(PipelineConfig::load(path).candidate_limit, 50u);
  std::filesystem::remove(path);
  EXPECT_THROW(PipelineConfig::load(path), ConfigError);
}

TEST(Config, EnvironmentProviders) {
  setenv("IDEAREADER_EMBED_URL", "http://127.0.0.1:9/x", 1);
  PipelineConfig c;
  c.apply_environment();
  unsetenv("IDEAREADER_EMBED_URL");
  EXPECT_EQ(c.providers.embed_url, "http://127.0.0.1:9/x");
  EXPECT_TRUE(c.embed_endpoint().enabled());
  EXPECT_FALSE(c.summarize_endpoint().enabled());
}

TEST(Timestamp, SourceDateEpoch) {
  setenv("SOURCE_DATE_EPOCH", "86400", 1);
  EXPECT_EQ(reproducible_timestamp(), "1970-01-02T00:00:00Z");
  unsetenv("SOURCE_DATE_EPOCH");
  EXPECT_EQ(reproducible_timestamp(), "1970-01-01T00:00:00Z");
}

}  // namespace
}  // namespace ideareader::service
