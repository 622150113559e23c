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

#include "ideareader/clustering.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ideareader::clustering {
namespace {

// Per-cluster sizes and kernel sums for a labelling.
struct ClusterStats {
  std::vector<std::size_t> size;
  std::vector<double> intra;   // sum over j, l in C of K_jl
  Eigen::MatrixXd point_sums;  // (i, c) -> sum over j in C of K_ij

  double distance(const KernelMatrix& kernel, std::size_t i, int c) const {
    const auto cs = static_cast<double>(size[static_cast<std::size_t>(c)]);
    const auto ii = static_cast<Eigen::Index>(i);
    return kernel.values(ii, ii) - 2.0 * point_sums(ii, c) / cs +
           intra[static_cast<std::size_t>(c)] / (cs * cs);
  }
};

ClusterStats cluster_stats(const KernelMatrix& kernel,
                           const std::vector<int>& labels, int k) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXd indicator = Eigen::MatrixXd::Zero(n, k);
  ClusterStats stats;
  stats.size.assign(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    int c = labels[static_cast<std::size_t>(i)];
    indicator(i, c) = 1.0;
    ++stats.size[static_cast<std::size_t>(c)];
  }
  stats.point_sums = kernel.values * indicator;
  stats.intra.assign(static_cast<std::size_t>(k), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    int c = labels[static_cast<std::size_t>(i)];
    stats.intra[static_cast<std::size_t>(c)] += stats.point_sums(i, c);
  }
  return stats;
}

// trace(K) - sum_c S_c / |C|, which equals the summed feature-space distance
// of every point to its cluster mean.
double objective_of(const KernelMatrix& kernel, const std::vector<int>& labels,
                    int k) {
  ClusterStats stats = cluster_stats(kernel, labels, k);
  double total = kernel.values.trace();
  for (int c = 0; c < k; ++c) {
    auto cs = stats.size[static_cast<std::size_t>(c)];
    if (cs > 0) total -= stats.intra[static_cast<std::size_t>(c)] / static_cast<double>(cs);
  }
  return std::max(0.0, total);
}

// Moves the point farthest from its own cluster mean into each empty
// cluster. Only points whose cluster keeps at least one member can move.
void repair_empty_clusters(const KernelMatrix& kernel, std::vector<int>& labels,
                           int k) {
  for (;;) {
    ClusterStats stats = cluster_stats(kernel, labels, k);
    auto empty = std::find(stats.size.begin(), stats.size.end(), 0u);
    if (empty == stats.size.end()) return;
    std::size_t best = labels.size();
    double best_distance = -1.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (stats.size[static_cast<std::size_t>(labels[i])] < 2) continue;
      double d = stats.distance(kernel, i, labels[i]);
      if (d > best_distance) {
        best_distance = d;
        best = i;
      }
    }
    if (best == labels.size())
      throw std::logic_error("kernel_kmeans: cannot repair empty cluster");
    labels[best] = static_cast<int>(empty - stats.size.begin());
  }
}

void check_k(const KernelMatrix& kernel, int k) {
  if (k < 1) throw std::invalid_argument("kernel_kmeans: k must be >= 1");
  if (static_cast<std::size_t>(k) > kernel.size())
    throw std::invalid_argument("kernel_kmeans: k exceeds the number of points");
}

}  // namespace

std::string_view to_string(KernelKind::Type type) {
  return type == KernelKind::Type::kLinear ? "linear" : "gaussian";
}

double KernelMatrix::squared_distance(std::size_t i, std::size_t j) const {
  const auto a = static_cast<Eigen::Index>(i);
  const auto b = static_cast<Eigen::Index>(j);
  return std::max(0.0, values(a, a) + values(b, b) - 2.0 * values(a, b));
}

KernelMatrix compute_kernel(const embedding::EmbeddingMatrix& emb,
                            KernelKind kind) {
  KernelMatrix kernel;
  kernel.ids = emb.ids;
  kernel.kind = kind;
  const Eigen::MatrixXd& r = emb.vectors;
  if (kind.type == KernelKind::Type::kLinear) {
    kernel.values = r * r.transpose();
  } else {
    const Eigen::Index n = r.rows();
    kernel.values.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      kernel.values(i, i) = 1.0;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        double v = std::exp(-kind.gamma * (r.row(i) - r.row(j)).squaredNorm());
        kernel.values(i, j) = v;
        kernel.values(j, i) = v;
      }
    }
  }
  // Exact symmetry regardless of summation order in the product above.
  kernel.values = 0.5 * (kernel.values + kernel.values.transpose()).eval();
  return kernel;
}

std::vector<std::size_t> ClusterAssignment::members(int cluster) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == cluster) out.push_back(i);
  }
  return out;
}

SeededStream::SeededStream(std::uint64_t seed) : engine_(seed) {}

double SeededStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SeededStream::index(std::size_t n) {
  auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return std::min(i, n - 1);
}

std::vector<int> seed_labels(const KernelMatrix& kernel, int k,
                             std::uint64_t seed) {
  check_k(kernel, k);
  const std::size_t n = kernel.size();
  SeededStream stream(seed);
  std::vector<std::size_t> centers{stream.index(n)};
  std::vector<bool> chosen(n, false);
  chosen[centers[0]] = true;
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i)
    nearest[i] = kernel.squared_distance(i, centers[0]);

  while (centers.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i]) total += nearest[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      double target = stream.uniform() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i] || nearest[i] <= 0.0) continue;
        cumulative += nearest[i];
        pick = i;
        if (cumulative > target) break;
      }
    } else {
      // All remaining points coincide with a center.
      pick = static_cast<std::size_t>(
          std::find(chosen.begin(), chosen.end(), false) - chosen.begin());
    }
    chosen[pick] = true;
    centers.push_back(pick);
    for (std::size_t i = 0; i < n; ++i)
      nearest[i] = std::min(nearest[i], kernel.squared_distance(i, pick));
  }

  std::vector<int> labels(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      double d = kernel.squared_distance(i, centers[static_cast<std::size_t>(c)]);
      if (d < best) {
        best = d;
        labels[i] = c;
      }
    }
  }
  for (int c = 0; c < k; ++c) labels[centers[static_cast<std::size_t>(c)]] = c;
  return labels;
}

ClusterAssignment kernel_kmeans(const KernelMatrix& kernel, int k,
                                std::uint64_t seed,
                                const KMeansOptions& options) {
  return kernel_kmeans_from(kernel, seed_labels(kernel, k, seed), k, options);
}

ClusterAssignment kernel_kmeans_from(const KernelMatrix& kernel,
                                     std::vector<int> initial_labels, int k,
                                     const KMeansOptions& options) {
  check_k(kernel, k);
  const std::size_t n = kernel.size();
  if (initial_labels.size() != n)
    throw std::invalid_argument("kernel_kmeans: one initial label per point");
  for (int label : initial_labels) {
    if (label < 0 || label >= k)
      throw std::invalid_argument("kernel_kmeans: initial label out of range");
  }

  ClusterAssignment result;
  result.ids = kernel.ids;
  result.k = k;
  std::vector<int> labels = std::move(initial_labels);
  repair_empty_clusters(kernel, labels, k);
  double objective = objective_of(kernel, labels, k);
  result.objective_trace.push_back(objective);

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    ClusterStats stats = cluster_stats(kernel, labels, k);
    std::vector<int> next(labels);
    for (std::size_t i = 0; i < n; ++i) {
      double best = stats.distance(kernel, i, labels[i]);
      for (int c = 0; c < k; ++c) {
        double d = stats.distance(kernel, i, c);
        if (d < best) {
          best = d;
          next[i] = c;
        }
      }
    }
    repair_empty_clusters(kernel, next, k);
    double next_objective = objective_of(kernel, next, k);
    result.objective_trace.push_back(next_objective);
    result.iterations = iter;
    bool changed = next != labels;
    labels = std::move(next);
    double delta = std::abs(objective - next_objective);
    objective = next_objective;
    if (!changed || delta < options.tol) break;
  }

  result.labels = std::move(labels);
  result.objective = objective;
  return result;
}

double mean_silhouette(const KernelMatrix& kernel, std::span<const int> labels,
                       int k) {
  const std::size_t n = kernel.size();
  if (labels.size() != n)
    throw std::invalid_argument("mean_silhouette: one label per point");
  if (n == 0) return 0.0;
  std::vector<std::size_t> size(static_cast<std::size_t>(k), 0);
  for (int label : labels) ++size[static_cast<std::size_t>(label)];

  double total = 0.0;
  std::vector<double> sums(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    const auto own = static_cast<std::size_t>(labels[i]);
    if (size[own] < 2) continue;
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sums[static_cast<std::size_t>(labels[j])] +=
          std::sqrt(kernel.squared_distance(i, j));
    }
    double a = sums[own] / static_cast<double>(size[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < sums.size(); ++c) {
      if (c == own || size[c] == 0) continue;
      b = std::min(b, sums[c] / static_cast<double>(size[c]));
    }
    if (!std::isfinite(b)) continue;
    double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(n);
}

KSelection select_k(const KernelMatrix& kernel, int k_min, int k_max,
                    std::uint64_t seed, const KMeansOptions& options) {
  const int n = static_cast<int>(kernel.size());
  if (n == 0) throw std::invalid_argument("select_k: empty kernel");
  if (k_min < 1 || k_max < k_min)
    throw std::invalid_argument("select_k: invalid k range");

  KSelection selection;
  if (n < k_min) {
    selection.k = std::min(n, 3);
    selection.assignment = kernel_kmeans(kernel, selection.k, seed, options);
    return selection;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int k = k_min; k <= std::min(k_max, n); ++k) {
    ClusterAssignment assignment = kernel_kmeans(kernel, k, seed, options);
    double s = mean_silhouette(kernel, assignment.labels, k);
    selection.silhouettes.emplace_back(k, s);
    if (s > best + 1e-12) {
      best = s;
      selection.k = k;
      selection.assignment = std::move(assignment);
    }
  }
  return selection;
}

}  // namespace ideareader::clustering
