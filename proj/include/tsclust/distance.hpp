#pragma once

#include <span>

#include "tsclust/errors.hpp"

namespace tsclust {

enum class DistanceKind { SquaredEuclidean, Pearson };

/// Sum over t of (r_t - s_t)^2. Zero iff the series are identical.
double squared_euclidean(std::span<const double> r, std::span<const double> s);

/// Pearson correlation coefficient in [-1, 1], computed with population
/// statistics and clamped against floating-point overshoot. Accepts raw
/// (unnormalized) series; both must be non-constant.
double pearson_coefficient(std::span<const double> r,
                           std::span<const double> s);

/// 1 - pearson_coefficient, in [0, 2]. Zero for r = alpha + beta*s, beta > 0.
double pearson_distance(std::span<const double> r, std::span<const double> s);

double distance(DistanceKind kind, std::span<const double> r,
                std::span<const double> s);

}  // namespace tsclust
