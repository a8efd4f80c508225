#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsclust/errors.hpp"

namespace tsclust {

/// How a z-scored series is rescaled after centering.
///
/// PopulationSigma divides by the population standard deviation (1/T
/// variance), so the output has mean 0 and sum of squares T. UnitNorm
/// additionally divides by sqrt(T), so the output has mean 0 and Euclidean
/// norm 1. UnitNorm is the convention required by the Pearson-constrained
/// k-Means variant, where 1 - x'p is the Pearson distance only for ||x|| = 1.
enum class NormalizationConvention { PopulationSigma, UnitNorm };

std::string_view to_string(NormalizationConvention c) noexcept;

/// Raw series of T >= 2 finite samples.
class TimeSeries {
public:
  /// Throws Error if fewer than 2 samples or any sample is not finite.
  explicit TimeSeries(std::vector<double> samples);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t length() const noexcept { return samples_.size(); }

private:
  std::vector<double> samples_;
};

/// Zero-mean series rescaled under a declared convention.
struct NormalizedSeries {
  std::vector<double> samples;
  NormalizationConvention convention = NormalizationConvention::UnitNorm;
};

/// n normalized series of uniform length and convention, stored row-major.
class Dataset {
public:
  /// Throws EmptyDatasetError / LengthMismatchError / ConventionMismatchError
  /// when the series disagree.
  static Dataset from_series(std::vector<NormalizedSeries> series,
                             std::vector<std::string> labels = {});

  /// Builds a dataset from rows that are claimed to already be normalized;
  /// each row is checked against the convention's invariants
  /// (NotNormalizedError otherwise).
  static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                           NormalizationConvention convention,
                           std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }         // n
  std::size_t length() const noexcept { return length_; }  // T
  NormalizationConvention convention() const noexcept { return convention_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * length_, length_};
  }

  /// Optional row labels; empty when none were attached.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
  Dataset() = default;

  std::vector<double> values_;
  std::size_t n_ = 0;
  std::size_t length_ = 0;
  NormalizationConvention convention_ = NormalizationConvention::UnitNorm;
  std::vector<std::string> labels_;
};

/// Population statistics of one series.
struct SeriesStats {
  double mean = 0.0;
  double sum_squared_diff = 0.0;  // sum over t of (x_t - mean)^2
};

SeriesStats series_stats(std::span<const double> samples) noexcept;

/// Centers and rescales one series.
///
/// PopulationSigma: (x - mu) / sigma with sigma the population standard
/// deviation, so the 1/T variance matching the Pearson distance definition.
/// UnitNorm: the same divided by sqrt(T), equivalently (x - mu) / ||x - mu||.
/// Throws ConstantSeriesError when the population sigma is zero.
NormalizedSeries zscore_normalize(const TimeSeries& series,
                                  NormalizationConvention convention);
NormalizedSeries zscore_normalize(std::span<const double> samples,
                                  NormalizationConvention convention);

struct DatasetNormalization {
  Dataset dataset;
  std::vector<std::size_t> dropped_rows;  // indices into the raw input
};

/// Normalizes a whole raw dataset.
///
/// All rows must share one length (LengthMismatchError otherwise). Constant
/// rows abort with ConstantSeriesError listing the offending indices, unless
/// drop_constant is set, in which case they are removed and reported.
/// Throws EmptyDatasetError when nothing remains.
DatasetNormalization validate_and_normalize_dataset(
    const std::vector<TimeSeries>& raw, NormalizationConvention convention,
    bool drop_constant);

}  // namespace tsclust
