#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsclust/kmeans.hpp"

namespace tsclust {

struct PerClusterEntropy {
  std::size_t cluster = 0;
  std::size_t size = 0;
  double entropy = 0.0;  // bits
};

/// Size-weighted average, over the clusters of one partition, of the entropy
/// of the label distribution induced by a second partition. Directional: low
/// values mean the first partition's clusters are pure under the second's
/// labels. Base-2 logarithm throughout.
struct ClusterComparison {
  double entropy = 0.0;  // bits
  std::vector<PerClusterEntropy> per_cluster;
  std::string direction;  // "<clusters> w.r.t. <labels>"
};

/// Entropy of `clusters` with the indices of `labels` as class labels.
/// 0*log2(0) counts as 0; empty clusters contribute 0 with weight 0.
ClusterComparison cross_entropy(const Memberships& clusters,
                                const Memberships& labels,
                                std::string_view clusters_name = "clusters",
                                std::string_view labels_name = "labels");

/// Euclidean norm of each prototype, in cluster order.
std::vector<double> prototype_norms(const Prototypes& p);

struct RunSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

/// Exact min/max and arithmetic mean; EmptyListError on an empty input.
RunSummary summarize_runs(std::span<const double> values);

}  // namespace tsclust
