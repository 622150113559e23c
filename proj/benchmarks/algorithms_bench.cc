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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ideareader/citation_graph.h"
#include "ideareader/clustering.h"
#include "ideareader/embedding.h"

namespace {

using namespace ideareader;

// Random DAG with roughly `avg_out` references per node.
graph::CitationGraph random_dag(int n, int avg_out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PaperId> ids;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<std::pair<PaperId, PaperId>> edges;
  for (int i = 0; i + 1 < n; ++i)
    for (int e = 0; e < avg_out; ++e) {
      int j = i + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - i - 1));
      edges.emplace_back(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
  return graph::CitationGraph::from_edges(ids, edges);
}

void BM_PageRank(benchmark::State& state) {
  auto g = random_dag(static_cast<int>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(graph::pagerank(g, g.ids()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PageRank)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Expansion(benchmark::State& state) {
  auto g = random_dag(static_cast<int>(state.range(0)), 6, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(graph::expand_candidates(g, "p0", Direction::kReferences, 100, 5));
}
BENCHMARK(BM_Expansion)->Arg(1000)->Arg(10000);

clustering::KernelMatrix random_kernel(int n, int dim) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  embedding::EmbeddingMatrix emb;
  emb.vectors.resize(n, dim);
  for (int i = 0; i < n; ++i) {
    emb.ids.push_back("x" + std::to_string(i));
    for (int d = 0; d < dim; ++d) emb.vectors(i, d) = normal(rng) + (d % 4 == i % 4 ? 3.0 : 0.0);
  }
  embedding::normalize_rows(emb.vectors, emb.zero_rows);
  return clustering::compute_kernel(emb);
}

void BM_KernelKMeans(benchmark::State& state) {
  auto kernel = random_kernel(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(clustering::kernel_kmeans(kernel, 4, 42));
}
BENCHMARK(BM_KernelKMeans)->Arg(25)->Arg(100)->Arg(400);

void BM_SelectK(benchmark::State& state) {
  auto kernel = random_kernel(100, 64);
  for (auto _ : state) benchmark::DoNotOptimize(clustering::select_k(kernel, 3, 6, 42));
}
BENCHMARK(BM_SelectK);

}  // namespace

BENCHMARK_MAIN();
