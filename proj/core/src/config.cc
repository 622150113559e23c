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

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ideareader/errors.h"
#include "json.hpp"

namespace ideareader::service {
namespace {

using nlohmann::json;
using Setter = std::function<void(const json&)>;

[[noreturn]] void bad_type(const std::string& key, const char* expected) {
  throw ConfigError("config key '" + key + "' must be " + expected);
}

Setter size_field(const std::string& key, std::size_t& target) {
  return [&target, key](const json& v) {
    if (!v.is_number_unsigned()) bad_type(key, "a non-negative integer");
    target = v.get<std::size_t>();
  };
}

Setter int_field(const std::string& key, int& target) {
  return [&target, key](const json& v) {
    if (!v.is_number_integer()) bad_type(key, "an integer");
    target = v.get<int>();
  };
}

Setter u64_field(const std::string& key, std::uint64_t& target) {
  return [&target, key](const json& v) {
    if (!v.is_number_unsigned()) bad_type(key, "a non-negative integer");
    target = v.get<std::uint64_t>();
  };
}

Setter double_field(const std::string& key, double& target) {
  return [&target, key](const json& v) {
    if (!v.is_number()) bad_type(key, "a number");
    target = v.get<double>();
  };
}

Setter string_field(const std::string& key, std::string& target) {
  return [&target, key](const json& v) {
    if (!v.is_string()) bad_type(key, "a string");
    target = v.get<std::string>();
  };
}

void apply_object(const json& obj, const std::map<std::string, Setter>& setters,
                  const std::string& scope) {
  if (!obj.is_object()) throw ConfigError(scope + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("unknown config key '" + scope + key + "'");
    it->second(value);
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError("invalid config: " + message);
}

std::optional<std::string> env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr) return std::nullopt;
  return std::string(value);
}

ProviderEndpoint endpoint(const ProviderSettings& p, const std::string& url) {
  ProviderEndpoint e;
  if (!url.empty()) e.base_url = url;
  e.timeout = std::chrono::milliseconds(p.timeout_ms);
  e.expected_dim = p.embed_dim;
  e.batch_size = p.batch_size;
  return e;
}

}  // namespace

void PipelineConfig::validate() const {
  require(expansion_threshold >= 1, "expansion_threshold must be >= 1");
  require(max_hops >= 1 && max_hops <= 50, "max_hops must be in [1, 50]");
  require(candidate_limit >= 1, "candidate_limit must be >= 1");
  require(pagerank_damping > 0.0 && pagerank_damping < 1.0,
          "pagerank_damping must be in (0, 1)");
  require(pagerank_tol > 0.0, "pagerank_tol must be positive");
  require(pagerank_max_iter >= 1, "pagerank_max_iter must be >= 1");
  require(embedding_dim >= 1, "embedding_dim must be >= 1");
  require(propagation_steps >= 0, "propagation_steps must be >= 0");
  require(propagation_mix >= 0.0 && propagation_mix <= 1.0,
          "propagation_mix must be in [0, 1]");
  require(kernel == "linear" || kernel == "gaussian",
          "kernel must be \"linear\" or \"gaussian\"");
  require(kernel_gamma > 0.0, "kernel_gamma must be positive");
  require(k_min >= 1 && k_max >= k_min, "need 1 <= k_min <= k_max");
  require(relevance_lambda >= 0.0, "relevance_lambda must be >= 0");
  require(topic_size >= 1 && topic_size <= 5, "topic_size must be in [1, 5]");
  require(providers.timeout_ms > 0, "providers.timeout_ms must be positive");
  require(providers.embed_dim >= 1, "providers.embed_dim must be >= 1");
  require(providers.batch_size >= 1, "providers.batch_size must be >= 1");
}

std::string PipelineConfig::canonical_json() const {
  json j = {
      {"expansion_threshold", expansion_threshold},
      {"max_hops", max_hops},
      {"candidate_limit", candidate_limit},
      {"pagerank_damping", pagerank_damping},
      {"pagerank_tol", pagerank_tol},
      {"pagerank_max_iter", pagerank_max_iter},
      {"embedding_dim", embedding_dim},
      {"propagation_steps", propagation_steps},
      {"propagation_mix", propagation_mix},
      {"kernel", kernel},
      {"kernel_gamma", kernel_gamma},
      {"k_min", k_min},
      {"k_max", k_max},
      {"relevance_lambda", relevance_lambda},
      {"topic_size", topic_size},
      {"seed", seed},
      {"providers",
       {{"embed_url", providers.embed_url},
        {"summarize_url", providers.summarize_url},
        {"classify_url", providers.classify_url},
        {"timeout_ms", providers.timeout_ms},
        {"embed_dim", providers.embed_dim},
        {"batch_size", providers.batch_size}}},
  };
  return j.dump();
}

std::string PipelineConfig::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_json()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, hash);
  return buf;
}

PipelineConfig PipelineConfig::from_json(std::string_view json_text,
                                         const PipelineConfig& base) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  PipelineConfig c = base;
  std::map<std::string, Setter> provider_setters = {
      {"embed_url", string_field("providers.embed_url", c.providers.embed_url)},
      {"summarize_url", string_field("providers.summarize_url", c.providers.summarize_url)},
      {"classify_url", string_field("providers.classify_url", c.providers.classify_url)},
      {"timeout_ms", int_field("providers.timeout_ms", c.providers.timeout_ms)},
      {"embed_dim", size_field("providers.embed_dim", c.providers.embed_dim)},
      {"batch_size", size_field("providers.batch_size", c.providers.batch_size)},
  };
  std::map<std::string, Setter> setters = {
      {"expansion_threshold", size_field("expansion_threshold", c.expansion_threshold)},
      {"max_hops", int_field("max_hops", c.max_hops)},
      {"candidate_limit", size_field("candidate_limit", c.candidate_limit)},
      {"pagerank_damping", double_field("pagerank_damping", c.pagerank_damping)},
      {"pagerank_tol", double_field("pagerank_tol", c.pagerank_tol)},
      {"pagerank_max_iter", int_field("pagerank_max_iter", c.pagerank_max_iter)},
      {"embedding_dim", size_field("embedding_dim", c.embedding_dim)},
      {"propagation_steps", int_field("propagation_steps", c.propagation_steps)},
      {"propagation_mix", double_field("propagation_mix", c.propagation_mix)},
      {"kernel", string_field("kernel", c.kernel)},
      {"kernel_gamma", double_field("kernel_gamma", c.kernel_gamma)},
      {"k_min", int_field("k_min", c.k_min)},
      {"k_max", int_field("k_max", c.k_max)},
      {"relevance_lambda", double_field("relevance_lambda", c.relevance_lambda)},
      {"topic_size", size_field("topic_size", c.topic_size)},
      {"seed", u64_field("seed", c.seed)},
      {"providers", [&](const json& v) { apply_object(v, provider_setters, "providers."); }},
  };
  apply_object(root, setters, "");
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::from_json(std::string_view json_text) {
  return from_json(json_text, PipelineConfig{});
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void PipelineConfig::apply_environment() {
  if (auto v = env("IDEAREADER_EMBED_URL")) providers.embed_url = *v;
  if (auto v = env("IDEAREADER_SUMMARIZE_URL")) providers.summarize_url = *v;
  if (auto v = env("IDEAREADER_CLASSIFY_URL")) providers.classify_url = *v;
}

clustering::KernelKind PipelineConfig::kernel_kind() const {
  return kernel == "gaussian" ? clustering::KernelKind::gaussian(kernel_gamma)
                              : clustering::KernelKind::linear();
}

ProviderEndpoint PipelineConfig::embed_endpoint() const {
  return endpoint(providers, providers.embed_url);
}

ProviderEndpoint PipelineConfig::summarize_endpoint() const {
  return endpoint(providers, providers.summarize_url);
}

ProviderEndpoint PipelineConfig::classify_endpoint() const {
  return endpoint(providers, providers.classify_url);
}

std::string reproducible_timestamp() {
  std::time_t seconds = 0;
  if (auto v = env("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long parsed = std::strtoll(v->c_str(), &end, 10);
    if (end != v->c_str() && *end == '\0' && parsed >= 0)
      seconds = static_cast<std::time_t>(parsed);
  }
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace ideareader::service
