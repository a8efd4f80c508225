#include "tsclust/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "tsclust/kernels.hpp"

namespace tsclust {

ClusterComparison cross_entropy(const Memberships& clusters,
                                const Memberships& labels,
                                std::string_view clusters_name,
                                std::string_view labels_name) {
  if (clusters.assignment.size() != labels.assignment.size()) {
    throw SizeMismatchError(
        "memberships cover different object counts: " +
        std::to_string(clusters.assignment.size()) + " vs " +
        std::to_string(labels.assignment.size()));
  }
  const std::size_t n = clusters.assignment.size();

  std::size_t k_clusters = 0;
  std::size_t k_labels = 0;
  for (std::size_t j = 0; j < n; ++j) {
    k_clusters = std::max(k_clusters, clusters.assignment[j] + 1);
    k_labels = std::max(k_labels, labels.assignment[j] + 1);
  }

  std::vector<std::size_t> counts(k_clusters * k_labels, 0);
  std::vector<std::size_t> sizes(k_clusters, 0);
  for (std::size_t j = 0; j < n; ++j) {
    ++counts[clusters.assignment[j] * k_labels + labels.assignment[j]];
    ++sizes[clusters.assignment[j]];
  }

  ClusterComparison out;
  out.direction = std::string(clusters_name) + " w.r.t. " +
                  std::string(labels_name);
  for (std::size_t i = 0; i < k_clusters; ++i) {
    PerClusterEntropy pc{i, sizes[i], 0.0};
    if (sizes[i] > 0) {
      for (std::size_t b = 0; b < k_labels; ++b) {
        const std::size_t c = counts[i * k_labels + b];
        if (c == 0) continue;  // 0 * log2(0) := 0
        const double q = static_cast<double>(c) / static_cast<double>(sizes[i]);
        pc.entropy -= q * std::log2(q);
      }
      out.entropy += (static_cast<double>(sizes[i]) / static_cast<double>(n)) *
                     pc.entropy;
    }
    out.per_cluster.push_back(pc);
  }
  return out;
}

std::vector<double> prototype_norms(const Prototypes& p) {
  std::vector<double> norms;
  norms.reserve(p.count());
  for (std::size_t i = 0; i < p.count(); ++i) {
    norms.push_back(std::sqrt(kernels::sum_squares(p.row(i))));
  }
  return norms;
}

RunSummary summarize_runs(std::span<const double> values) {
  if (values.empty()) {
    throw EmptyListError("cannot summarize an empty value list");
  }
  RunSummary s{values[0], values[0], 0.0};
  double total = 0.0;
  for (double v : values) {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    total += v;
  }
  s.mean = total / static_cast<double>(values.size());
  return s;
}

}  // namespace tsclust
