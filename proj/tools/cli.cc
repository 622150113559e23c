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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ideareader/citation_graph.h"
#include "ideareader/config.h"
#include "ideareader/corpus.h"
#include "ideareader/errors.h"
#include "ideareader/pipeline.h"
#include "ideareader/service.h"
#include "ideareader/tree_report.h"

namespace ideareader::cli {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << bytes;
  if (!out.flush()) throw DataError("cannot write " + path.string());
}

service::PipelineConfig load_config(const std::optional<std::string>& path) {
  service::PipelineConfig config =
      path ? service::PipelineConfig::load(*path) : service::PipelineConfig{};
  config.apply_environment();
  config.validate();
  return config;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"IdeaReader machine reading of citation neighbourhoods",
               "ideareader"};
  app.require_subcommand(1);

  std::string corpus_file, out_path, store_dir, target, result_file;
  std::optional<std::string> config_file;
  int port = 8080;

  CLI::App* ingest = app.add_subcommand("ingest", "Clean a JSONL corpus into a store");
  ingest->add_option("corpus-file", corpus_file)->required();
  ingest->add_option("--out", out_path, "Store directory")->required();

  CLI::App* run = app.add_subcommand("run", "Run the pipeline for one target");
  run->add_option("--store", store_dir)->required();
  run->add_option("--target", target)->required();
  run->add_option("--config", config_file);
  run->add_option("--out", out_path, "Result document path")->required();

  CLI::App* report = app.add_subcommand("report", "Render a result document as HTML");
  report->add_option("--result", result_file)->required();
  report->add_option("--out", out_path)->required();

  CLI::App* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--store", store_dir)->required();
  serve->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve->add_option("--config", config_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ideareader: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*ingest) {
      auto store = corpus::CorpusStore::ingest(fs::path(corpus_file));
      store.save(out_path);
      const auto& s = store.stats();
      out << "stored " << store.size() << " papers (" << s.records_read
          << " read, " << s.duplicates_dropped << " duplicates, "
          << s.dangling_dropped << " dangling references, "
          << s.self_edges_dropped << " self references dropped)\n";
    } else if (*run) {
      auto config = load_config(config_file);
      auto store = corpus::CorpusStore::load(store_dir);
      auto graph = graph::build_graph(store);
      auto result = service::run_pipeline(store, graph, target, config);
      for (const auto& w : result.warnings) err << "warning: " << w << "\n";
      write_file(out_path, result.bytes);
      for (const auto& t : result.timings)
        out << t.stage << ": " << t.milliseconds << " ms\n";
    } else if (*report) {
      auto doc = report::parse_result(read_file(result_file));
      write_file(out_path, report::render_report(doc));
    } else if (*serve) {
      auto config = load_config(config_file);
      auto store = corpus::CorpusStore::load(store_dir);
      err << "serving on port " << port << "\n";
      service::serve(std::move(store), std::move(config), port);
    }
  } catch (const std::exception& e) {
    err << "ideareader: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace ideareader::cli
