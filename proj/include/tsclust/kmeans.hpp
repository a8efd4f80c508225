#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tsclust/series.hpp"

namespace tsclust {

/// Prototype update rule.
///
/// StandardEuclidean moves each prototype to the arithmetic mean of its
/// members. PearsonCorrected rescales that mean to unit Euclidean norm, which
/// is the constrained optimum of the Pearson objective; it requires a
/// UnitNorm-convention dataset so that 1 - x'p stays interpretable as the
/// Pearson distance.
enum class KMeansVariant { StandardEuclidean, PearsonCorrected };

std::string_view to_string(KMeansVariant v) noexcept;

struct PrototypeInit {
  enum class Kind { RandomDraw, Explicit };

  Kind kind = Kind::RandomDraw;
  std::vector<std::vector<double>> vectors;  // used when kind == Explicit

  static PrototypeInit random_draw() { return {}; }
  static PrototypeInit explicit_vectors(std::vector<std::vector<double>> v) {
    return {Kind::Explicit, std::move(v)};
  }
};

struct KMeansConfig {
  std::size_t k = 2;
  std::size_t max_iters = 300;
  std::uint64_t seed = 0;
  KMeansVariant variant = KMeansVariant::StandardEuclidean;
  PrototypeInit init;
};

/// Hard partition: one cluster index in [0, k) per data object.
struct Memberships {
  std::vector<std::size_t> assignment;

  bool operator==(const Memberships&) const = default;
};

/// k prototype vectors of uniform length, stored row-major.
class Prototypes {
public:
  Prototypes(std::size_t k, std::size_t length)
      : k_(k), length_(length), values_(k * length, 0.0) {}

  std::size_t count() const noexcept { return k_; }
  std::size_t length() const noexcept { return length_; }

  std::span<double> row(std::size_t i) noexcept {
    return {values_.data() + i * length_, length_};
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * length_, length_};
  }

private:
  std::size_t k_;
  std::size_t length_;
  std::vector<double> values_;
};

struct ClusteringResult {
  Memberships memberships;
  Prototypes prototypes{0, 0};
  std::vector<double> objective_trace;  // J after each full iteration
  std::size_t iterations = 0;           // completed assign+update iterations
  std::uint64_t seed = 0;
  bool converged = false;
};

/// Called after each iteration's prototype update, before the next assignment.
using IterationObserver = std::function<void(
    std::size_t iteration, const Memberships&, const Prototypes&)>;

/// Initial prototypes.
///
/// RandomDraw copies k distinct dataset rows chosen by a partial
/// Fisher-Yates shuffle driven by SplitMix64(config.seed); draw order is one
/// next_below(n - i) call per selected row, i = 0..k-1. Explicit copies the
/// supplied vectors, rescaling each to unit Euclidean norm when the variant
/// is PearsonCorrected.
Prototypes init_prototypes(const Dataset& dataset, const KMeansConfig& config);

/// Nearest prototype under squared Euclidean distance; ties broken by the
/// lowest cluster index.
Memberships assign_memberships(const Dataset& dataset,
                               const Prototypes& prototypes);

/// Mean prototype update. Empty clusters are repaired by moving their
/// prototype onto the data object farthest from its own assigned prototype
/// (ties by lowest row index; each repair consumes a distinct object).
Prototypes update_prototypes_mean(const Dataset& dataset, const Memberships& m,
                                  std::size_t k);

/// Unit-norm prototype update: the member mean rescaled to Euclidean norm 1
/// (the member sum has the same direction). Clusters whose member sum cancels
/// below norm 1e-12, and empty clusters, are repaired as above;
/// ZeroNormPrototypeError is raised only if the repair runs out of objects.
/// Requires a UnitNorm-convention dataset.
Prototypes update_prototypes_pearson(const Dataset& dataset,
                                     const Memberships& m, std::size_t k);

/// J = sum over objects of the distance to the assigned prototype:
/// squared Euclidean for StandardEuclidean, 1 - x'p for PearsonCorrected.
double objective(const Dataset& dataset, const Memberships& m,
                 const Prototypes& p, KMeansVariant variant);

/// Batch k-Means: alternate assignment and prototype update until the
/// memberships repeat or max_iters is reached. Deterministic given
/// (dataset, config).
ClusteringResult run_kmeans(const Dataset& dataset, const KMeansConfig& config,
                            const IterationObserver& observer = {});

}  // namespace tsclust
