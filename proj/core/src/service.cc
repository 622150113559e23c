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

#include "ideareader/service.h"

#include <charconv>
#include <iostream>

#include "httplib.h"
#include "ideareader/errors.h"
#include "ideareader/pipeline.h"
#include "json.hpp"

namespace ideareader::service {
namespace {

using nlohmann::json;

std::string cache_key(std::string_view id, const std::string& digest) {
  return std::string(id) + '\x1f' + digest;
}

json paper_summary_json(const PaperRecord& rec, const graph::CitationGraph& graph) {
  return {{"id", rec.id},
          {"title", rec.title},
          {"year", rec.year},
          {"authors", rec.authors},
          {"venue", rec.venue},
          {"reference_count", rec.reference_ids.size()},
          {"citation_count", graph.citations(rec.id).size()}};
}

std::string error_body(std::string_view message) {
  return json{{"error", message}}.dump(2) + "\n";
}

constexpr std::size_t kDefaultSearchLimit = 10;
constexpr std::size_t kMaxSearchLimit = 1000;

}  // namespace

IdeaFlowService::IdeaFlowService(corpus::CorpusStore store, PipelineConfig config)
    : store_(std::move(store)), graph_(graph::build_graph(store_)),
      config_(std::move(config)) {
  config_.validate();
}

std::shared_ptr<const CachedResult> IdeaFlowService::compute(
    std::string_view id, const PipelineConfig& config) {
  if (store_.find(id) == nullptr) throw UnknownPaperError(std::string(id));
  const std::string digest = config.digest();
  const std::string key = cache_key(id, digest);

  std::promise<std::shared_ptr<const CachedResult>> promise;
  Entry entry;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      entry = it->second;
    } else {
      entry = promise.get_future().share();
      entries_.emplace(key, entry);
      owner = true;
    }
  }
  if (owner) {
    try {
      ++computations_;
      if (observer_) observer_(id);
      MachineReadingResult result = run_pipeline(store_, graph_, id, config);
      auto cached = std::make_shared<CachedResult>();
      cached->digest = digest;
      cached->result_bytes = std::move(result.bytes);
      cached->report_html = std::move(result.report_html);
      promise.set_value(std::move(cached));
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        entries_.erase(key);
      }
      promise.set_exception(std::current_exception());
    }
  }
  return entry.get();
}

std::shared_ptr<const CachedResult> IdeaFlowService::cached(std::string_view id) const {
  Entry entry;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(cache_key(id, config_.digest()));
    if (it == entries_.end()) return nullptr;
    entry = it->second;
  }
  try {
    return entry.get();
  } catch (const std::exception&) {
    return nullptr;
  }
}

std::string IdeaFlowService::search_json(std::string_view query,
                                         std::size_t limit) const {
  json results = json::array();
  for (const PaperRecord* rec : store_.search(query, limit))
    results.push_back(paper_summary_json(*rec, graph_));
  return json{{"query", query}, {"limit", limit}, {"results", std::move(results)}}.dump(2) +
         "\n";
}

std::string IdeaFlowService::paper_json(std::string_view id) const {
  const PaperRecord* rec = store_.find(id);
  if (rec == nullptr) throw UnknownPaperError(std::string(id));
  json j = paper_summary_json(*rec, graph_);
  j["abstract"] = rec->abstract;
  j["references"] = rec->reference_ids;
  return j.dump(2) + "\n";
}

struct HttpServer::Impl {
  IdeaFlowService& service;
  httplib::Server server;

  explicit Impl(IdeaFlowService& s) : service(s) {
    // SO_REUSEADDR only; httplib also sets SO_REUSEPORT by default.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
    });
    install_routes();
  }

  static void send_json(httplib::Response& res, int status, std::string body) {
    res.status = status;
    res.set_content(std::move(body), "application/json");
  }

  void install_routes() {
    server.Get("/api/papers", [this](const httplib::Request& req, httplib::Response& res) {
      std::size_t limit = kDefaultSearchLimit;
      if (req.has_param("limit")) {
        std::string raw = req.get_param_value("limit");
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), limit);
        if (ec != std::errc() || ptr != raw.data() + raw.size() || limit == 0 ||
            limit > kMaxSearchLimit) {
          send_json(res, 400, error_body("limit must be an integer in [1, 1000]"));
          return;
        }
      }
      send_json(res, 200, service.search_json(req.get_param_value("q"), limit));
    });

    server.Get(R"(/api/papers/([^/]+))", [this](const httplib::Request& req,
                                               httplib::Response& res) {
      send_json(res, 200, service.paper_json(req.matches[1].str()));
    });

    server.Post(R"(/api/ideaflow/([^/]+))", [this](const httplib::Request& req,
                                                  httplib::Response& res) {
      const std::string id = req.matches[1].str();
      if (service.store().find(id) == nullptr) throw UnknownPaperError(id);
      PipelineConfig config = service.config();
      if (!text_is_blank(req.body)) {
        try {
          config = PipelineConfig::from_json(req.body, service.config());
        } catch (const ConfigError& e) {
          send_json(res, 400, error_body(e.what()));
          return;
        }
      }
      send_json(res, 200, service.compute(id, config)->result_bytes);
    });

    server.Get(R"(/api/ideaflow/([^/]+))", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
      const std::string id = req.matches[1].str();
      if (service.store().find(id) == nullptr) throw UnknownPaperError(id);
      auto cached = service.cached(id);
      if (!cached) {
        send_json(res, 404, error_body("no result computed for '" + id + "'"));
        return;
      }
      send_json(res, 200, cached->result_bytes);
    });

    server.Get(R"(/api/ideaflow/([^/]+)/report)", [this](const httplib::Request& req,
                                                        httplib::Response& res) {
      const std::string id = req.matches[1].str();
      if (service.store().find(id) == nullptr) throw UnknownPaperError(id);
      auto cached = service.cached(id);
      if (!cached) {
        send_json(res, 404, error_body("no result computed for '" + id + "'"));
        return;
      }
      res.status = 200;
      res.set_content(cached->report_html, "text/html; charset=utf-8");
    });

    server.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                    std::exception_ptr ep) {
      try {
        std::rethrow_exception(ep);
      } catch (const UnknownPaperError& e) {
        send_json(res, 404, error_body(e.what()));
      } catch (const std::exception& e) {
        std::cerr << "ideareader: request failed: " << e.what() << "\n";
        send_json(res, 500, error_body("internal error"));
      } catch (...) {
        send_json(res, 500, error_body("internal error"));
      }
    });
  }

  static bool text_is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
  }
};

HttpServer::HttpServer(IdeaFlowService& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind to " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port))
    throw Error("cannot bind to " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

void serve(corpus::CorpusStore store, PipelineConfig config, int port,
           const std::string& host) {
  IdeaFlowService service(std::move(store), std::move(config));
  HttpServer server(service);
  int bound = server.bind(host, port);
  std::cerr << "ideareader: serving " << service.store().size() << " papers on http://"
            << host << ":" << bound << "\n";
  server.listen();
}

}  // namespace ideareader::service
