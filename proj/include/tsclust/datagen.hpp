#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tsclust/kmeans.hpp"
#include "tsclust/series.hpp"

namespace tsclust {

/// Two anti-correlated trend clusters with asymmetric noise plus a small
/// group of V-shaped probe series that correlate equally with both trends.
/// The probes' assignment split diagnoses the bias of the mean prototype
/// update toward the noisier cluster.
struct DevilsAdvocateConfig {
  std::size_t n_per_cluster = 100;
  std::size_t n_probes = 10;
  double sigma_increasing = 30.0;
  double sigma_decreasing = 10.0;
  double sigma_probe = 10.0;
  std::uint64_t seed = 0;
};

enum class SeriesGroup { Increasing, Decreasing, Probe };

std::string_view to_string(SeriesGroup g) noexcept;

struct TaggedDataset {
  Dataset dataset;  // unit-norm convention
  std::vector<SeriesGroup> group_of;
};

inline constexpr std::size_t kTemplateLength = 32;

/// Raw group templates, length 32. The probe is the symmetric V
/// |t - 15.5|, which is exactly uncorrelated with both linear trends; its
/// amplitude matches the two ramps' half range.
std::vector<double> increasing_template();  // 0, 1, ..., 31
std::vector<double> decreasing_template();  // 31, 30, ..., 0
std::vector<double> probe_template();       // 15.5, 14.5, ..., 0.5, 0.5, ..., 15.5

/// Generates rows in group order (Increasing, Decreasing, Probe), each as its
/// template plus i.i.d. Gaussian noise of the group's sigma, then unit-norm
/// z-scored. Noise comes from SplitMix64(config.seed) via next_gaussian(), in
/// sample order; a constant row (possible only in theory) is redrawn from the
/// following draws. Identical configs produce bitwise-identical datasets.
TaggedDataset generate_devils_advocate(const DevilsAdvocateConfig& config);

/// Unit-norm-normalized increasing and decreasing templates, in that order,
/// for explicit initialization.
std::vector<std::vector<double>> template_prototypes();

struct ProbeSplit {
  std::size_t to_increasing = 0;
  std::size_t to_decreasing = 0;
};

/// Index of the prototype whose Pearson correlation with the increasing
/// template is higher. AmbiguousClusterIdentityError if both correlate
/// equally within 1e-9.
std::size_t increasing_cluster_index(const Prototypes& prototypes);

/// How the probe rows split across the two clusters of a k = 2 result.
ProbeSplit probe_split(const ClusteringResult& result,
                       const TaggedDataset& tagged);

/// UCR-style text serialization: one row per line, group tag as the class
/// label, comma-separated samples at full precision.
void write_ucr(const TaggedDataset& tagged, std::ostream& out);
void write_ucr(const TaggedDataset& tagged, const std::filesystem::path& path);

}  // namespace tsclust
