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

#include "oracles.h"

#include <cmath>
#include <limits>
#include <set>

namespace ideareader::testing {

std::vector<double> dense_pagerank(int n, const std::vector<std::pair<int, int>>& edges,
                                   double damping) {
  // Column-stochastic transition matrix M with M(to, from) = 1/outdeg(from).
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::set<int>> out(static_cast<std::size_t>(n));
  for (auto [from, to] : edges) {
    if (from != to) out[static_cast<std::size_t>(from)].insert(to);
  }
  for (int j = 0; j < n; ++j) {
    const auto& targets = out[static_cast<std::size_t>(j)];
    if (targets.empty()) {
      m.col(j).setConstant(1.0 / n);
    } else {
      for (int t : targets) m(t, j) = 1.0 / static_cast<double>(targets.size());
    }
  }
  Eigen::MatrixXd g = damping * m + Eigen::MatrixXd::Constant(n, n, (1.0 - damping) / n);
  Eigen::VectorXd r = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int iter = 0; iter < 100000; ++iter) {
    Eigen::VectorXd next = g * r;
    double change = (next - r).lpNorm<1>();
    r = next;
    if (change < 1e-14) break;
  }
  r /= r.sum();
  return {r.data(), r.data() + n};
}

BfsExpansion level_bfs(const std::map<std::string, std::vector<std::string>>& adjacency,
                       const std::string& target, std::size_t threshold, int max_hops) {
  BfsExpansion out;
  std::set<std::string> seen{target};
  std::vector<std::string> frontier{target};
  for (int hop = 1; hop <= max_hops; ++hop) {
    std::vector<std::string> next;
    for (const auto& node : frontier) {
      auto it = adjacency.find(node);
      if (it == adjacency.end()) continue;
      for (const auto& nb : it->second) {
        if (seen.insert(nb).second) {
          next.push_back(nb);
          out.members[nb] = hop;
        }
      }
    }
    if (next.empty()) {
      out.exhausted = true;
      break;
    }
    if (out.members.size() > threshold) break;
    frontier = std::move(next);
  }
  return out;
}

namespace {

Eigen::MatrixXd centres_of(const Eigen::MatrixXd& rows, const std::vector<int>& labels, int k,
                           std::vector<int>& sizes) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(k, rows.cols());
  sizes.assign(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    c.row(labels[static_cast<std::size_t>(i)]) += rows.row(i);
    ++sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
  }
  for (int j = 0; j < k; ++j) {
    if (sizes[static_cast<std::size_t>(j)] > 0) c.row(j) /= sizes[static_cast<std::size_t>(j)];
  }
  return c;
}

void repair(const Eigen::MatrixXd& rows, std::vector<int>& labels, int k) {
  for (;;) {
    std::vector<int> sizes;
    Eigen::MatrixXd c = centres_of(rows, labels, k, sizes);
    int empty = -1;
    for (int j = 0; j < k; ++j) {
      if (sizes[static_cast<std::size_t>(j)] == 0) {
        empty = j;
        break;
      }
    }
    if (empty < 0) return;
    Eigen::Index far = -1;
    double far_d = -1.0;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      int l = labels[static_cast<std::size_t>(i)];
      if (sizes[static_cast<std::size_t>(l)] < 2) continue;
      double d = (rows.row(i) - c.row(l)).squaredNorm();
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    labels[static_cast<std::size_t>(far)] = empty;
  }
}

}  // namespace

double kmeans_objective(const Eigen::MatrixXd& rows, const std::vector<int>& labels, int k) {
  std::vector<int> sizes;
  Eigen::MatrixXd c = centres_of(rows, labels, k, sizes);
  double total = 0.0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    total += (rows.row(i) - c.row(labels[static_cast<std::size_t>(i)])).squaredNorm();
  return total;
}

std::vector<int> lloyd_kmeans(const Eigen::MatrixXd& rows, std::vector<int> labels, int k,
                              int max_iter, double tol) {
  repair(rows, labels, k);
  double objective = kmeans_objective(rows, labels, k);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<int> sizes;
    Eigen::MatrixXd c = centres_of(rows, labels, k, sizes);
    std::vector<int> next = labels;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      auto& l = next[static_cast<std::size_t>(i)];
      double best = (rows.row(i) - c.row(l)).squaredNorm();
      for (int j = 0; j < k; ++j) {
        if (sizes[static_cast<std::size_t>(j)] == 0) continue;
        double d = (rows.row(i) - c.row(j)).squaredNorm();
        if (d < best) {
          best = d;
          l = j;
        }
      }
    }
    repair(rows, next, k);
    double next_objective = kmeans_objective(rows, next, k);
    bool changed = next != labels;
    labels = std::move(next);
    double delta = std::abs(objective - next_objective);
    objective = next_objective;
    if (!changed || delta < tol) break;
  }
  return labels;
}

double silhouette(const Eigen::MatrixXd& rows, const std::vector<int>& labels, int k) {
  const auto n = static_cast<std::size_t>(rows.rows());
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = (rows.row(static_cast<Eigen::Index>(i)) - rows.row(static_cast<Eigen::Index>(j))).norm();
      sum[static_cast<std::size_t>(labels[j])] += d;
      ++count[static_cast<std::size_t>(labels[j])];
    }
    auto own = static_cast<std::size_t>(labels[i]);
    if (count[own] == 0) continue;
    double a = sum[own] / count[own];
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < sum.size(); ++c) {
      if (c != own && count[c] > 0) b = std::min(b, sum[c] / count[c]);
    }
    if (std::isinf(b)) continue;
    double m = std::max(a, b);
    if (m > 0) total += (b - a) / m;
  }
  return total / static_cast<double>(n);
}

std::vector<int> best_two_partition(const Eigen::MatrixXd& rows) {
  const auto n = static_cast<int>(rows.rows());
  std::vector<int> best;
  double best_obj = std::numeric_limits<double>::infinity();
  // Point 0 fixed in part 0; mask over points 1..n-1, at least one in part 1.
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) labels[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
    double obj = kmeans_objective(rows, labels, 2);
    if (obj < best_obj) {
      best_obj = obj;
      best = labels;
    }
  }
  return best;
}

Eigen::MatrixXd dense_propagate(const Eigen::MatrixXd& adjacency, Eigen::MatrixXd rows,
                                int steps, double mix) {
  const Eigen::Index n = adjacency.rows();
  Eigen::MatrixXd a = adjacency + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd degree = a.rowwise().sum();
  Eigen::MatrixXd p = degree.cwiseInverse().asDiagonal() * a;
  for (int s = 0; s < steps; ++s) rows = mix * rows + (1.0 - mix) * (p * rows);
  for (Eigen::Index i = 0; i < n; ++i) {
    double norm = rows.row(i).norm();
    if (norm > 0) rows.row(i) /= norm;
  }
  return rows;
}

double mean_intra_block_cosine(const Eigen::MatrixXd& rows, const std::vector<int>& block) {
  double total = 0;
  int pairs = 0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = i + 1; j < rows.rows(); ++j) {
      if (block[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(j)]) continue;
      total += rows.row(i).dot(rows.row(j)) / (rows.row(i).norm() * rows.row(j).norm());
      ++pairs;
    }
  return pairs == 0 ? 0.0 : total / pairs;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<std::pair<int, int>, long> cells;
  std::map<int, long> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++cells[{a[i], b[i]}];
    ++rows[a[i]];
    ++cols[b[i]];
  }
  auto c2 = [](long x) { return static_cast<double>(x) * static_cast<double>(x - 1) / 2.0; };
  double index = 0, sa = 0, sb = 0;
  for (auto& [_, v] : cells) index += c2(v);
  for (auto& [_, v] : rows) sa += c2(v);
  for (auto& [_, v] : cols) sb += c2(v);
  double total = c2(static_cast<long>(a.size()));
  double expected = sa * sb / total;
  double max_index = 0.5 * (sa + sb);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = ab.emplace(a[i], b[i]).first;
    auto y = ba.emplace(b[i], a[i]).first;
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

}  // namespace ideareader::testing
