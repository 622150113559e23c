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

#ifndef IDEAREADER_SERVICE_H_
#define IDEAREADER_SERVICE_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "ideareader/citation_graph.h"
#include "ideareader/config.h"
#include "ideareader/corpus.h"

namespace ideareader::service {

struct CachedResult {
  std::string digest;
  std::string result_bytes;
  std::string report_html;
};

// Owns the corpus and graph and caches pipeline results by
// (target id, config digest). Concurrent requests for the same key share a
// single computation. Thread-safe.
class IdeaFlowService {
 public:
  IdeaFlowService(corpus::CorpusStore store, PipelineConfig config);

  const corpus::CorpusStore& store() const { return store_; }
  const graph::CitationGraph& graph() const { return graph_; }
  const PipelineConfig& config() const { return config_; }

  // Computes (or joins / reuses) the result for `id` under `config`.
  // Throws UnknownPaperError for unknown ids.
  std::shared_ptr<const CachedResult> compute(std::string_view id,
                                              const PipelineConfig& config);
  std::shared_ptr<const CachedResult> compute(std::string_view id) {
    return compute(id, config_);
  }

  // The result for `id` under the service config, or nullptr when it was
  // never computed. Waits for an in-flight computation of the same key.
  std::shared_ptr<const CachedResult> cached(std::string_view id) const;

  // Number of pipeline runs actually started.
  std::size_t computation_count() const { return computations_.load(); }

  // Called with the target id at the start of every pipeline run.
  void set_compute_observer(std::function<void(std::string_view)> observer) {
    observer_ = std::move(observer);
  }

  // JSON bodies served by the paper endpoints.
  std::string search_json(std::string_view query, std::size_t limit) const;
  // Throws UnknownPaperError.
  std::string paper_json(std::string_view id) const;

 private:
  using Entry = std::shared_future<std::shared_ptr<const CachedResult>>;

  corpus::CorpusStore store_;
  graph::CitationGraph graph_;
  PipelineConfig config_;
  mutable std::mutex mu_;
  std::map<std::string, Entry, std::less<>> entries_;
  std::atomic<std::size_t> computations_{0};
  std::function<void(std::string_view)> observer_;
};

// HTTP front of an IdeaFlowService:
//   GET  /api/papers?q=<query>&limit=<n>
//   GET  /api/papers/<id>
//   POST /api/ideaflow/<id>         body: empty or JSON config overrides
//   GET  /api/ideaflow/<id>
//   GET  /api/ideaflow/<id>/report
class HttpServer {
 public:
  explicit HttpServer(IdeaFlowService& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds without serving; port 0 picks a free port. Returns the bound port.
  // Throws Error on bind failure.
  int bind(const std::string& host, int port);
  // Serves until stop(); must follow bind().
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Builds the service and serves it on host:port until the process exits.
void serve(corpus::CorpusStore store, PipelineConfig config, int port,
           const std::string& host = "0.0.0.0");

}  // namespace ideareader::service

#endif  // IDEAREADER_SERVICE_H_
