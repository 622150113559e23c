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

#include <chrono>
#include <filesystem>
#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"
#include "ideareader/errors.h"
#include "ideareader/pipeline.h"
#include "json.hpp"

namespace ideareader::service {
namespace {

using nlohmann::json;

corpus::CorpusStore fixture_store() {
  return corpus::CorpusStore::ingest(std::filesystem::path(IDEAREADER_TEST_DATA_DIR) / "fixture_corpus.jsonl");
}

// Service plus HTTP front on an ephemeral port, torn down on scope exit.
class LiveServer {
 public:
  LiveServer() : service_(fixture_store(), PipelineConfig{}), http_(service_) {
    port_ = http_.bind("127.0.0.1", 0);
    thread_ = std::thread([this] { http_.listen(); });
    while (!http_.running()) std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  ~LiveServer() {
    http_.stop();
    thread_.join();
  }
  IdeaFlowService& service() { return service_; }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(120, 0);
    return c;
  }

 private:
  IdeaFlowService service_;
  HttpServer http_;
  int port_ = 0;
  std::thread thread_;
};

TEST(Service, ComputeCachesByDigest) {
  IdeaFlowService svc(fixture_store(), PipelineConfig{});
  EXPECT_EQ(svc.cached("T"), nullptr);
  auto a = svc.compute("T");
  auto b = svc.compute("T");
  EXPECT_EQ(a, b);
  EXPECT_EQ(svc.computation_count(), 1u);
  EXPECT_EQ(svc.cached("T"), a);
  EXPECT_EQ(a->digest, PipelineConfig{}.digest());

  auto graph = graph::build_graph(svc.store());
  EXPECT_EQ(a->result_bytes, run_pipeline(svc.store(), graph, "T", PipelineConfig{}).bytes);

  PipelineConfig other;
  other.seed = 7;
  auto c = svc.compute("T", other);
  EXPECT_EQ(svc.computation_count(), 2u);
  EXPECT_EQ(c->digest, other.digest());
  EXPECT_THROW(svc.compute("missing"), UnknownPaperError);
}

TEST(Service, ConcurrentComputeCoalesces) {
  IdeaFlowService svc(fixture_store(), PipelineConfig{});
  svc.set_compute_observer([](std::string_view) { std::this_thread::sleep_for(std::chrono::milliseconds(200)); });
  std::shared_ptr<const CachedResult> r1, r2;
  std::thread t1([&] { r1 = svc.compute("T"); });
  std::thread t2([&] { r2 = svc.compute("T"); });
  t1.join();
  t2.join();
  EXPECT_EQ(svc.computation_count(), 1u);
  EXPECT_EQ(r1->result_bytes, r2->result_bytes);
}

TEST(Service, PaperJson) {
  IdeaFlowService svc(fixture_store(), PipelineConfig{});
  auto j = json::parse(svc.paper_json("T"));
  EXPECT_EQ(j["id"], "T");
  EXPECT_EQ(j["reference_count"], 12);
  EXPECT_GT(j["citation_count"].get<int>(), 0);
  EXPECT_THROW(svc.paper_json("nope"), UnknownPaperError);
}

TEST(Http, EndpointStatusCodes) {
  LiveServer server;
  auto cli = server.client();

  auto search = cli.Get("/api/papers?q=tracing%20ideas&limit=5");
  ASSERT_TRUE(search);
  EXPECT_EQ(search->status, 200);
  auto hits = json::parse(search->body)["results"];
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits[0]["id"], "T");
  EXPECT_EQ(cli.Get("/api/papers?q=x&limit=0")->status, 400);
  EXPECT_EQ(cli.Get("/api/papers?q=x&limit=abc")->status, 400);

  EXPECT_EQ(cli.Get("/api/papers/T")->status, 200);
  EXPECT_EQ(cli.Get("/api/papers/missing")->status, 404);

  EXPECT_EQ(cli.Get("/api/ideaflow/T")->status, 404);
  EXPECT_EQ(cli.Get("/api/ideaflow/T/report")->status, 404);
  EXPECT_EQ(cli.Post("/api/ideaflow/missing", "", "application/json")->status, 404);
  EXPECT_EQ(cli.Get("/api/ideaflow/missing")->status, 404);
  EXPECT_EQ(cli.Post("/api/ideaflow/T", "{not json", "application/json")->status, 400);
  EXPECT_EQ(cli.Post("/api/ideaflow/T", R"({"bogus": 1})", "application/json")->status, 400);

  auto post = cli.Post("/api/ideaflow/T", "", "application/json");
  ASSERT_TRUE(post);
  EXPECT_EQ(post->status, 200);
  auto get = cli.Get("/api/ideaflow/T");
  EXPECT_EQ(get->status, 200);
  EXPECT_EQ(get->body, post->body);
  EXPECT_EQ(server.service().computation_count(), 1u);

  auto report = cli.Get("/api/ideaflow/T/report");
  EXPECT_EQ(report->status, 200);
  EXPECT_NE(report->get_header_value("Content-Type").find("text/html"), std::string::npos);
  EXPECT_EQ(report->body, server.service().cached("T")->report_html);

  auto overridden = cli.Post("/api/ideaflow/T", R"({"seed": 3})", "application/json");
  EXPECT_EQ(overridden->status, 200);
  PipelineConfig seeded;
  seeded.seed = 3;
  EXPECT_EQ(json::parse(overridden->body)["config_digest"], seeded.digest());
}

TEST(Http, InternalErrorsAreOpaque) {
  LiveServer server;
  server.service().set_compute_observer([](std::string_view) { throw std::runtime_error("secret detail"); });
  auto res = server.client().Post("/api/ideaflow/T", "", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 500);
  EXPECT_EQ(res->body.find("secret"), std::string::npos);
  // A failed computation is not cached.
  EXPECT_EQ(server.service().cached("T"), nullptr);
}

TEST(Http, ConcurrentPostsShareOneComputation) {
  LiveServer server;
  server.service().set_compute_observer(
      [](std::string_view) { std::this_thread::sleep_for(std::chrono::milliseconds(300)); });
  httplib::Result a, b;
  std::thread t1([&] { a = server.client().Post("/api/ideaflow/T", "", "application/json"); });
  std::thread t2([&] { b = server.client().Post("/api/ideaflow/T", "", "application/json"); });
  t1.join();
  t2.join();
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->status, 200);
  EXPECT_EQ(a->body, b->body);
  EXPECT_EQ(json::parse(a->body)["config_digest"], json::parse(b->body)["config_digest"]);
  EXPECT_EQ(server.service().computation_count(), 1u);
}

TEST(Http, BindFailureThrows) {
  LiveServer first;
  IdeaFlowService svc(fixture_store(), PipelineConfig{});
  HttpServer second(svc);
  httplib::Server probe;
  int port = probe.bind_to_any_port("127.0.0.1");
  EXPECT_THROW(second.bind("127.0.0.1", port), Error);
}

}  // namespace
}  // namespace ideareader::service
