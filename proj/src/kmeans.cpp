#include "tsclust/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tsclust/kernels.hpp"
#include "tsclust/rng.hpp"

namespace tsclust {

namespace {

constexpr double kZeroNormThreshold = 1e-12;

void check_memberships(const Dataset& dataset, const Memberships& m,
                       std::size_t k) {
  if (m.assignment.size() != dataset.size()) {
    throw SizeMismatchError("memberships cover " +
                            std::to_string(m.assignment.size()) +
                            " objects, dataset has " +
                            std::to_string(dataset.size()));
  }
  for (std::size_t a : m.assignment) {
    if (a >= k) {
      throw Error("cluster index " + std::to_string(a) + " out of range [0, " +
                  std::to_string(k) + ")");
    }
  }
}

std::vector<std::size_t> cluster_sizes(const Memberships& m, std::size_t k) {
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t a : m.assignment) ++sizes[a];
  return sizes;
}

// Sums members into each cluster row (fixed object order), returns sizes.
std::vector<std::size_t> accumulate_means(const Dataset& dataset,
                                          const Memberships& m, std::size_t k,
                                          Prototypes& protos) {
  const std::vector<std::size_t> sizes = cluster_sizes(m, k);
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    kernels::add_inplace(protos.row(m.assignment[j]), dataset.row(j));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (sizes[i] > 0) {
      kernels::scale_inplace(protos.row(i), 1.0 / static_cast<double>(sizes[i]));
    }
  }
  return sizes;
}

// Moves each degenerate cluster's prototype onto the object farthest from its
// own assigned prototype. Degenerate rows still hold their placeholder value
// (zero or the cancelled mean) while candidates are ranked, and each repair
// consumes a distinct object.
void repair_degenerate_clusters(const Dataset& dataset, const Memberships& m,
                                Prototypes& protos,
                                const std::vector<std::size_t>& degenerate) {
  if (degenerate.empty()) return;
  std::vector<bool> used(dataset.size(), false);
  for (std::size_t ci : degenerate) {
    std::size_t best_j = dataset.size();
    double best_d = -1.0;
    for (std::size_t j = 0; j < dataset.size(); ++j) {
      if (used[j]) continue;
      const double d = kernels::squared_distance(
          dataset.row(j), protos.row(m.assignment[j]));
      if (d > best_d) {
        best_d = d;
        best_j = j;
      }
    }
    if (best_j == dataset.size()) {
      throw ZeroNormPrototypeError("cluster " + std::to_string(ci) +
                                   " could not be repaired: no objects left");
    }
    std::ranges::copy(dataset.row(best_j), protos.row(ci).begin());
    used[best_j] = true;
  }
}

}  // namespace

std::string_view to_string(KMeansVariant v) noexcept {
  switch (v) {
    case KMeansVariant::StandardEuclidean: return "standard";
    case KMeansVariant::PearsonCorrected: return "pearson";
  }
  return "unknown";
}

Prototypes init_prototypes(const Dataset& dataset, const KMeansConfig& config) {
  if (config.k == 0) throw Error("k must be at least 1");
  if (config.k > dataset.size()) {
    throw KTooLargeError("k = " + std::to_string(config.k) +
                         " exceeds dataset size " +
                         std::to_string(dataset.size()));
  }

  Prototypes protos(config.k, dataset.length());
  if (config.init.kind == PrototypeInit::Kind::RandomDraw) {
    std::vector<std::size_t> indices(dataset.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    SplitMix64 rng(config.seed);
    for (std::size_t i = 0; i < config.k; ++i) {
      const std::size_t j = i + rng.next_below(dataset.size() - i);
      std::swap(indices[i], indices[j]);
      std::ranges::copy(dataset.row(indices[i]), protos.row(i).begin());
    }
    return protos;
  }

  const auto& vectors = config.init.vectors;
  if (vectors.size() != config.k) {
    throw ExplicitShapeMismatchError(
        std::to_string(vectors.size()) + " explicit prototypes given, k = " +
        std::to_string(config.k));
  }
  for (std::size_t i = 0; i < config.k; ++i) {
    if (vectors[i].size() != dataset.length()) {
      throw ExplicitShapeMismatchError(
          "explicit prototype " + std::to_string(i) + " has length " +
          std::to_string(vectors[i].size()) + ", expected " +
          std::to_string(dataset.length()));
    }
    std::ranges::copy(vectors[i], protos.row(i).begin());
    if (config.variant == KMeansVariant::PearsonCorrected) {
      const double norm = std::sqrt(kernels::sum_squares(protos.row(i)));
      if (norm < kZeroNormThreshold) {
        throw ZeroNormPrototypeError("explicit prototype " +
                                     std::to_string(i) + " has zero norm");
      }
      kernels::scale_inplace(protos.row(i), 1.0 / norm);
    }
  }
  return protos;
}

Memberships assign_memberships(const Dataset& dataset,
                               const Prototypes& prototypes) {
  if (prototypes.count() == 0) {
    throw Error("cannot assign memberships without prototypes");
  }
  if (prototypes.length() != dataset.length()) {
    throw LengthMismatchError("prototype length " +
                              std::to_string(prototypes.length()) +
                              " does not match series length " +
                              std::to_string(dataset.length()));
  }
  Memberships m;
  m.assignment.resize(dataset.size());
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    const auto x = dataset.row(j);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < prototypes.count(); ++i) {
      const double d = kernels::squared_distance(x, prototypes.row(i));
      if (d < best_d) {  // strict: equal distances keep the lower index
        best_d = d;
        best = i;
      }
    }
    m.assignment[j] = best;
  }
  return m;
}

Prototypes update_prototypes_mean(const Dataset& dataset, const Memberships& m,
                                  std::size_t k) {
  check_memberships(dataset, m, k);
  Prototypes protos(k, dataset.length());
  const std::vector<std::size_t> sizes = accumulate_means(dataset, m, k, protos);
  std::vector<std::size_t> empty;
  for (std::size_t i = 0; i < k; ++i) {
    if (sizes[i] == 0) empty.push_back(i);
  }
  repair_degenerate_clusters(dataset, m, protos, empty);
  return protos;
}

Prototypes update_prototypes_pearson(const Dataset& dataset,
                                     const Memberships& m, std::size_t k) {
  if (dataset.convention() != NormalizationConvention::UnitNorm) {
    throw ConventionMismatchError(
        "the Pearson-corrected update requires a unit-norm dataset");
  }
  check_memberships(dataset, m, k);
  Prototypes protos(k, dataset.length());
  const std::vector<std::size_t> sizes = accumulate_means(dataset, m, k, protos);
  std::vector<std::size_t> degenerate;
  for (std::size_t i = 0; i < k; ++i) {
    if (sizes[i] == 0) {
      degenerate.push_back(i);
      continue;
    }
    const double mean_norm = std::sqrt(kernels::sum_squares(protos.row(i)));
    // The cancellation threshold applies to the member sum, which is mean * size.
    if (mean_norm * static_cast<double>(sizes[i]) < kZeroNormThreshold) {
      degenerate.push_back(i);
      continue;
    }
    kernels::scale_inplace(protos.row(i), 1.0 / mean_norm);
  }
  repair_degenerate_clusters(dataset, m, protos, degenerate);
  return protos;
}

double objective(const Dataset& dataset, const Memberships& m,
                 const Prototypes& p, KMeansVariant variant) {
  check_memberships(dataset, m, p.count());
  double total = 0.0;
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    const auto x = dataset.row(j);
    const auto proto = p.row(m.assignment[j]);
    if (variant == KMeansVariant::StandardEuclidean) {
      total += kernels::squared_distance(x, proto);
    } else {
      total += 1.0 - kernels::dot(x, proto);
    }
  }
  return total;
}

ClusteringResult run_kmeans(const Dataset& dataset, const KMeansConfig& config,
                            const IterationObserver& observer) {
  if (config.max_iters == 0) throw Error("max_iters must be at least 1");
  if (config.variant == KMeansVariant::PearsonCorrected &&
      dataset.convention() != NormalizationConvention::UnitNorm) {
    throw ConventionMismatchError(
        "the Pearson-corrected variant requires a unit-norm dataset");
  }

  ClusteringResult result;
  result.seed = config.seed;
  result.prototypes = init_prototypes(dataset, config);

  Memberships previous;
  bool have_previous = false;
  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    Memberships m = assign_memberships(dataset, result.prototypes);
    if (have_previous && m == previous) {
      result.converged = true;
      result.memberships = std::move(m);
      return result;
    }
    result.prototypes =
        config.variant == KMeansVariant::StandardEuclidean
            ? update_prototypes_mean(dataset, m, config.k)
            : update_prototypes_pearson(dataset, m, config.k);
    result.objective_trace.push_back(
        objective(dataset, m, result.prototypes, config.variant));
    result.iterations = iter;
    if (observer) observer(iter, m, result.prototypes);
    previous = std::move(m);
    have_previous = true;
  }
  result.memberships = std::move(previous);
  return result;
}

}  // namespace tsclust
