#include "tsclust/datagen.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "tsclust/distance.hpp"
#include "tsclust/rng.hpp"

namespace tsclust {

namespace {

NormalizedSeries noisy_row(const std::vector<double>& tmpl, double sigma,
                           SplitMix64& rng) {
  std::vector<double> samples(tmpl.size());
  for (;;) {
    for (std::size_t t = 0; t < tmpl.size(); ++t) {
      samples[t] = tmpl[t] + sigma * rng.next_gaussian();
    }
    const SeriesStats stats = series_stats(samples);
    if (stats.sum_squared_diff > 0.0) break;  // redraw a constant row
  }
  return zscore_normalize(samples, NormalizationConvention::UnitNorm);
}

}  // namespace

std::string_view to_string(SeriesGroup g) noexcept {
  switch (g) {
    case SeriesGroup::Increasing: return "increasing";
    case SeriesGroup::Decreasing: return "decreasing";
    case SeriesGroup::Probe: return "probe";
  }
  return "unknown";
}

std::vector<double> increasing_template() {
  std::vector<double> t(kTemplateLength);
  for (std::size_t i = 0; i < kTemplateLength; ++i) {
    t[i] = static_cast<double>(i);
  }
  return t;
}

std::vector<double> decreasing_template() {
  std::vector<double> t(kTemplateLength);
  for (std::size_t i = 0; i < kTemplateLength; ++i) {
    t[i] = static_cast<double>(kTemplateLength - 1 - i);
  }
  return t;
}

std::vector<double> probe_template() {
  std::vector<double> t(kTemplateLength);
  for (std::size_t i = 0; i < kTemplateLength; ++i) {
    t[i] = std::abs(static_cast<double>(i) - 15.5);
  }
  return t;
}

TaggedDataset generate_devils_advocate(const DevilsAdvocateConfig& config) {
  if (config.n_per_cluster == 0 || config.n_probes == 0) {
    throw Error("group counts must be at least 1");
  }
  if (config.sigma_increasing < 0.0 || config.sigma_decreasing < 0.0 ||
      config.sigma_probe < 0.0) {
    throw Error("noise sigmas must be nonnegative");
  }

  SplitMix64 rng(config.seed);
  std::vector<NormalizedSeries> rows;
  std::vector<SeriesGroup> groups;
  std::vector<std::string> labels;
  rows.reserve(2 * config.n_per_cluster + config.n_probes);

  const auto emit = [&](const std::vector<double>& tmpl, double sigma,
                        SeriesGroup group, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      rows.push_back(noisy_row(tmpl, sigma, rng));
      groups.push_back(group);
      labels.emplace_back(to_string(group));
    }
  };
  emit(increasing_template(), config.sigma_increasing, SeriesGroup::Increasing,
       config.n_per_cluster);
  emit(decreasing_template(), config.sigma_decreasing, SeriesGroup::Decreasing,
       config.n_per_cluster);
  emit(probe_template(), config.sigma_probe, SeriesGroup::Probe,
       config.n_probes);

  return TaggedDataset{Dataset::from_series(std::move(rows), std::move(labels)),
                       std::move(groups)};
}

std::vector<std::vector<double>> template_prototypes() {
  const NormalizedSeries inc = zscore_normalize(
      increasing_template(), NormalizationConvention::UnitNorm);
  const NormalizedSeries dec = zscore_normalize(
      decreasing_template(), NormalizationConvention::UnitNorm);
  return {inc.samples, dec.samples};
}

std::size_t increasing_cluster_index(const Prototypes& prototypes) {
  if (prototypes.count() != 2) {
    throw Error("cluster identity is defined for k = 2, got k = " +
                std::to_string(prototypes.count()));
  }
  const std::vector<double> reference = increasing_template();
  const double c0 = pearson_coefficient(prototypes.row(0), reference);
  const double c1 = pearson_coefficient(prototypes.row(1), reference);
  if (std::abs(c0 - c1) <= 1e-9) {
    throw AmbiguousClusterIdentityError(
        "both prototypes correlate equally with the increasing template");
  }
  return c0 > c1 ? 0 : 1;
}

ProbeSplit probe_split(const ClusteringResult& result,
                       const TaggedDataset& tagged) {
  if (result.memberships.assignment.size() != tagged.group_of.size()) {
    throw SizeMismatchError("result covers " +
                            std::to_string(result.memberships.assignment.size()) +
                            " objects, dataset has " +
                            std::to_string(tagged.group_of.size()));
  }
  const std::size_t increasing = increasing_cluster_index(result.prototypes);
  ProbeSplit split;
  for (std::size_t j = 0; j < tagged.group_of.size(); ++j) {
    if (tagged.group_of[j] != SeriesGroup::Probe) continue;
    if (result.memberships.assignment[j] == increasing) {
      ++split.to_increasing;
    } else {
      ++split.to_decreasing;
    }
  }
  return split;
}

void write_ucr(const TaggedDataset& tagged, std::ostream& out) {
  char buf[32];
  for (std::size_t j = 0; j < tagged.dataset.size(); ++j) {
    out << to_string(tagged.group_of[j]);
    for (double v : tagged.dataset.row(j)) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
}

void write_ucr(const TaggedDataset& tagged,
               const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_ucr(tagged, out);
  if (!out.good()) {
    throw IoError("failed while writing " + path.string());
  }
}

}  // namespace tsclust
