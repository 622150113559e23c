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

#ifndef IDEAREADER_CLUSTERING_H_
#define IDEAREADER_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ideareader/corpus.h"
#include "ideareader/embedding.h"

namespace ideareader::clustering {

struct KernelKind {
  enum class Type { kLinear, kGaussian };

  Type type = Type::kLinear;
  double gamma = 1.0;  // used by the gaussian kernel only

  static KernelKind linear() { return {}; }
  static KernelKind gaussian(double gamma = 1.0) {
    return {Type::kGaussian, gamma};
  }
};

std::string_view to_string(KernelKind::Type type);

struct KernelMatrix {
  std::vector<PaperId> ids;
  Eigen::MatrixXd values;
  KernelKind kind;

  std::size_t size() const { return ids.size(); }
  // Squared feature-space distance K_ii + K_jj - 2 K_ij, clamped at zero.
  double squared_distance(std::size_t i, std::size_t j) const;
};

// linear: K_ij = <r_i, r_j>; gaussian: K_ij = exp(-gamma * |r_i - r_j|^2).
KernelMatrix compute_kernel(const embedding::EmbeddingMatrix& emb,
                            KernelKind kind = KernelKind::linear());

struct ClusterAssignment {
  std::vector<PaperId> ids;
  std::vector<int> labels;
  int k = 0;
  // Within-cluster feature-space distortion after the last iteration.
  double objective = 0.0;
  int iterations = 0;
  // objective_trace[0] is the seeded partition, then one entry per iteration.
  std::vector<double> objective_trace;

  std::vector<std::size_t> members(int cluster) const;
};

struct KMeansOptions {
  int max_iter = 100;
  double tol = 1e-9;
};

// Deterministic uniform stream in [0, 1) built on std::mt19937_64, whose
// output sequence is fixed by the standard; unlike the std distributions
// it is identical across standard library implementations.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed);
  double uniform();
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// k-means++ seeding on kernel distances. Returns one label per point; every
// cluster is nonempty.
std::vector<int> seed_labels(const KernelMatrix& kernel, int k,
                             std::uint64_t seed);

// Kernel k-means from the k-means++ seeding. Throws std::invalid_argument
// unless 1 <= k <= n.
ClusterAssignment kernel_kmeans(const KernelMatrix& kernel, int k,
                                std::uint64_t seed,
                                const KMeansOptions& options = {});

// Same iteration from caller-provided initial labels in [0, k).
ClusterAssignment kernel_kmeans_from(const KernelMatrix& kernel,
                                     std::vector<int> initial_labels, int k,
                                     const KMeansOptions& options = {});

// Mean silhouette under kernel-induced distances. Points in singleton
// clusters score 0.
double mean_silhouette(const KernelMatrix& kernel, std::span<const int> labels,
                       int k);

struct KSelection {
  int k = 0;
  ClusterAssignment assignment;
  // (k, mean silhouette) for every k that was tried.
  std::vector<std::pair<int, double>> silhouettes;
};

// Runs kernel_kmeans for k in [k_min, min(k_max, n)] and keeps the k with the
// highest mean silhouette, smaller k on ties. With n < k_min, k = min(n, 3).
KSelection select_k(const KernelMatrix& kernel, int k_min, int k_max,
                    std::uint64_t seed, const KMeansOptions& options = {});

inline int choose_k(const KernelMatrix& kernel, int k_min = 3, int k_max = 6,
                    std::uint64_t seed = 42) {
  return select_k(kernel, k_min, k_max, seed).k;
}

}  // namespace ideareader::clustering

#endif  // IDEAREADER_CLUSTERING_H_
