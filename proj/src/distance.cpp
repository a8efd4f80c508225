#include "tsclust/distance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsclust/kernels.hpp"
#include "tsclust/series.hpp"

namespace tsclust {

namespace {

void check_lengths(std::span<const double> r, std::span<const double> s) {
  if (r.size() != s.size()) {
    throw LengthMismatchError("series lengths differ: " +
                              std::to_string(r.size()) + " vs " +
                              std::to_string(s.size()));
  }
}

}  // namespace

double squared_euclidean(std::span<const double> r,
                         std::span<const double> s) {
  check_lengths(r, s);
  return kernels::squared_distance(r, s);
}

double pearson_coefficient(std::span<const double> r,
                           std::span<const double> s) {
  check_lengths(r, s);
  const SeriesStats sr = series_stats(r);
  const SeriesStats ss = series_stats(s);
  if (sr.sum_squared_diff == 0.0 || ss.sum_squared_diff == 0.0) {
    throw ConstantSeriesError(
        "Pearson correlation is undefined for constant series");
  }
  // (1/T) sum (r-mu_r)(s-mu_s) / (sigma_r sigma_s) with population sigma
  // reduces to the centered dot product over sqrt of the two sums of squares.
  const double rho = kernels::dot_centered(r, sr.mean, s, ss.mean) /
                     std::sqrt(sr.sum_squared_diff * ss.sum_squared_diff);
  return std::clamp(rho, -1.0, 1.0);
}

double pearson_distance(std::span<const double> r, std::span<const double> s) {
  return 1.0 - pearson_coefficient(r, s);
}

double distance(DistanceKind kind, std::span<const double> r,
                std::span<const double> s) {
  switch (kind) {
    case DistanceKind::SquaredEuclidean: return squared_euclidean(r, s);
    case DistanceKind::Pearson: return pearson_distance(r, s);
  }
  throw Error("unknown distance kind");
}

}  // namespace tsclust
