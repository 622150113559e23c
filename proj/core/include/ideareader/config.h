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

#ifndef IDEAREADER_CONFIG_H_
#define IDEAREADER_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "ideareader/clustering.h"
#include "ideareader/provider.h"

namespace ideareader::service {

struct ProviderSettings {
  // Empty URL = provider absent, offline fallback.
  std::string embed_url;
  std::string summarize_url;
  std::string classify_url;
  int timeout_ms = 10000;
  std::size_t embed_dim = 768;
  std::size_t batch_size = 64;

  bool operator==(const ProviderSettings&) const = default;
};

// Every tunable of the machine-reading pipeline. The JSON form uses the
// snake_case member names; providers nest under "providers".
struct PipelineConfig {
  std::size_t expansion_threshold = 100;
  int max_hops = 5;
  std::size_t candidate_limit = 100;
  double pagerank_damping = 0.85;
  double pagerank_tol = 1e-10;
  int pagerank_max_iter = 200;
  std::size_t embedding_dim = 128;
  int propagation_steps = 3;
  double propagation_mix = 0.5;
  std::string kernel = "linear";  // "linear" or "gaussian"
  double kernel_gamma = 1.0;
  int k_min = 3;
  int k_max = 6;
  double relevance_lambda = 0.5;
  std::size_t topic_size = 5;
  std::uint64_t seed = 42;
  ProviderSettings providers;

  bool operator==(const PipelineConfig&) const = default;

  // Throws ConfigError when a field is outside its documented range.
  void validate() const;

  // Sorted-key JSON of every field; the digest input.
  std::string canonical_json() const;
  // 16 hex digits of the FNV-1a 64-bit hash of canonical_json().
  std::string digest() const;

  // Overlays the keys present in `json_text` onto `base`. Unknown keys and
  // wrongly typed values throw ConfigError; the result is validated.
  static PipelineConfig from_json(std::string_view json_text,
                                  const PipelineConfig& base);
  static PipelineConfig from_json(std::string_view json_text);
  static PipelineConfig load(const std::filesystem::path& path);

  // IDEAREADER_EMBED_URL, IDEAREADER_SUMMARIZE_URL, IDEAREADER_CLASSIFY_URL.
  void apply_environment();

  clustering::KernelKind kernel_kind() const;
  ProviderEndpoint embed_endpoint() const;
  ProviderEndpoint summarize_endpoint() const;
  ProviderEndpoint classify_endpoint() const;
};

// SOURCE_DATE_EPOCH when set, else the Unix epoch, as ISO-8601 UTC.
std::string reproducible_timestamp();

}  // namespace ideareader::service

#endif  // IDEAREADER_CONFIG_H_
