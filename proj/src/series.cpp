#include "tsclust/series.hpp"

#include <cmath>
#include <utility>

#include "tsclust/kernels.hpp"

namespace tsclust {

namespace {

std::string row_list(const std::vector<std::size_t>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(rows[i]);
  }
  return out;
}

// Checks the NormalizedSeries invariants for one row.
void check_normalized(std::span<const double> row,
                      NormalizationConvention convention, std::size_t index) {
  const std::size_t t = row.size();
  double max_abs = 0.0;
  for (double v : row) max_abs = std::max(max_abs, std::abs(v));
  const double mean = kernels::sum(row) / static_cast<double>(t);
  if (std::abs(mean) > 1e-12 * std::max(1.0, max_abs)) {
    throw NotNormalizedError("row " + std::to_string(index) +
                             " is not zero-mean");
  }
  const double ss = kernels::sum_squares(row);
  if (convention == NormalizationConvention::PopulationSigma) {
    if (std::abs(ss - static_cast<double>(t)) > 1e-9 * static_cast<double>(t)) {
      throw NotNormalizedError("row " + std::to_string(index) +
                               " does not have population sigma 1");
    }
  } else {
    if (std::abs(ss - 1.0) > 1e-12) {
      throw NotNormalizedError("row " + std::to_string(index) +
                               " does not have unit norm");
    }
  }
}

}  // namespace

std::string_view to_string(NormalizationConvention c) noexcept {
  switch (c) {
    case NormalizationConvention::PopulationSigma: return "population-sigma";
    case NormalizationConvention::UnitNorm: return "unit-norm";
  }
  return "unknown";
}

TimeSeries::TimeSeries(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw Error("a time series needs at least 2 samples, got " +
                std::to_string(samples_.size()));
  }
  for (std::size_t t = 0; t < samples_.size(); ++t) {
    if (!std::isfinite(samples_[t])) {
      throw Error("sample " + std::to_string(t) + " is not finite");
    }
  }
}

SeriesStats series_stats(std::span<const double> samples) noexcept {
  SeriesStats stats;
  stats.mean = kernels::sum(samples) / static_cast<double>(samples.size());
  stats.sum_squared_diff = kernels::sum_squared_diff(samples, stats.mean);
  return stats;
}

NormalizedSeries zscore_normalize(std::span<const double> samples,
                                  NormalizationConvention convention) {
  if (samples.size() < 2) {
    throw Error("cannot normalize a series shorter than 2 samples");
  }
  const SeriesStats stats = series_stats(samples);
  if (stats.sum_squared_diff == 0.0) {
    throw ConstantSeriesError("constant series has zero population sigma");
  }
  // PopulationSigma: 1/sigma = sqrt(T/ss). UnitNorm: 1/(sigma*sqrt(T)),
  // which is exactly 1/sqrt(ss).
  const double factor =
      convention == NormalizationConvention::PopulationSigma
          ? std::sqrt(static_cast<double>(samples.size()) /
                      stats.sum_squared_diff)
          : 1.0 / std::sqrt(stats.sum_squared_diff);
  NormalizedSeries out;
  out.convention = convention;
  out.samples.resize(samples.size());
  kernels::center_scale(out.samples, samples, stats.mean, factor);
  return out;
}

NormalizedSeries zscore_normalize(const TimeSeries& series,
                                  NormalizationConvention convention) {
  return zscore_normalize(series.samples(), convention);
}

Dataset Dataset::from_series(std::vector<NormalizedSeries> series,
                             std::vector<std::string> labels) {
  if (series.empty()) {
    throw EmptyDatasetError("a dataset needs at least one series");
  }
  if (!labels.empty() && labels.size() != series.size()) {
    throw SizeMismatchError("labels count does not match series count");
  }
  const std::size_t length = series.front().samples.size();
  const NormalizationConvention convention = series.front().convention;
  Dataset ds;
  ds.n_ = series.size();
  ds.length_ = length;
  ds.convention_ = convention;
  ds.labels_ = std::move(labels);
  ds.values_.reserve(ds.n_ * length);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].samples.size() != length) {
      throw LengthMismatchError("series " + std::to_string(i) + " has length " +
                                std::to_string(series[i].samples.size()) +
                                ", expected " + std::to_string(length));
    }
    if (series[i].convention != convention) {
      throw ConventionMismatchError("series " + std::to_string(i) +
                                    " uses a different convention");
    }
    ds.values_.insert(ds.values_.end(), series[i].samples.begin(),
                      series[i].samples.end());
  }
  return ds;
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           NormalizationConvention convention,
                           std::vector<std::string> labels) {
  std::vector<NormalizedSeries> series;
  series.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_normalized(rows[i], convention, i);
    series.push_back(NormalizedSeries{rows[i], convention});
  }
  return from_series(std::move(series), std::move(labels));
}

DatasetNormalization validate_and_normalize_dataset(
    const std::vector<TimeSeries>& raw, NormalizationConvention convention,
    bool drop_constant) {
  if (raw.empty()) {
    throw EmptyDatasetError("no series supplied");
  }
  const std::size_t length = raw.front().length();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].length() != length) {
      throw LengthMismatchError("row " + std::to_string(i) + " has length " +
                                std::to_string(raw[i].length()) +
                                ", expected " + std::to_string(length));
    }
  }

  std::vector<std::size_t> constant_rows;
  std::vector<NormalizedSeries> normalized;
  normalized.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const SeriesStats stats = series_stats(raw[i].samples());
    if (stats.sum_squared_diff == 0.0) {
      constant_rows.push_back(i);
      continue;
    }
    normalized.push_back(zscore_normalize(raw[i].samples(), convention));
  }

  if (!constant_rows.empty() && !drop_constant) {
    throw ConstantSeriesError(
        "constant series at row(s) " + row_list(constant_rows) +
            "; pass drop_constant to remove them",
        constant_rows);
  }
  if (normalized.empty()) {
    throw EmptyDatasetError("all rows were constant and dropped");
  }

  DatasetNormalization out{Dataset::from_series(std::move(normalized)),
                           std::move(constant_rows)};
  return out;
}

}  // namespace tsclust
