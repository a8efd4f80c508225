#include <doctest.h>

#include <cmath>
#include <vector>

#include "tsclust/distance.hpp"
#include "tsclust/rng.hpp"
#include "tsclust/series.hpp"

using namespace tsclust;

namespace {

std::vector<double> random_series(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.next_unit() * 20.0 - 10.0;
  return v;
}

using V = std::vector<double>;

}  // namespace

TEST_CASE("squared_euclidean") {
  const std::vector<double> zero{0.0, 0.0, 0.0};
  CHECK(squared_euclidean(zero, zero) == 0.0);

  // 4 + 0 + 4 by direct summation
  CHECK(squared_euclidean(V{1.0, 2.0, 3.0}, V{3.0, 2.0, 1.0}) == 8.0);

  CHECK_THROWS_AS(squared_euclidean(V{1.0, 2.0}, V{1.0, 2.0, 3.0}),
                  LengthMismatchError);

  SplitMix64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng.next_below(30);
    const std::vector<double> a = random_series(rng, n);
    const std::vector<double> b = random_series(rng, n);
    CHECK(squared_euclidean(a, b) == squared_euclidean(b, a));
    CHECK(squared_euclidean(a, b) >= 0.0);
    CHECK(squared_euclidean(a, a) == 0.0);
  }
}

TEST_CASE("pearson_coefficient") {
  // r = alpha + beta*s with beta > 0 correlates perfectly
  CHECK(pearson_coefficient(V{1.0, 2.0, 3.0}, V{2.0, 4.0, 6.0}) == 1.0);
  // s = 4 - r anti-correlates perfectly
  CHECK(pearson_coefficient(V{1.0, 2.0, 3.0}, V{3.0, 2.0, 1.0}) == -1.0);
  // centered dot product (-0.5,0.5,-0.5,0.5).(-2,-2,2,2) = 0
  CHECK(pearson_coefficient(V{1.0, 2.0, 1.0, 2.0}, V{5.0, 5.0, 9.0, 9.0}) ==
        0.0);

  CHECK_THROWS_AS(pearson_coefficient(V{5.0, 5.0, 5.0}, V{1.0, 2.0, 3.0}),
                  ConstantSeriesError);
  CHECK_THROWS_AS(pearson_coefficient(V{1.0, 2.0, 3.0}, V{5.0, 5.0, 5.0}),
                  ConstantSeriesError);
  CHECK_THROWS_AS(pearson_coefficient(V{1.0, 2.0}, V{1.0, 2.0, 3.0}),
                  LengthMismatchError);

  SplitMix64 rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rng.next_below(40);
    const double rho =
        pearson_coefficient(random_series(rng, n), random_series(rng, n));
    CHECK(rho >= -1.0);
    CHECK(rho <= 1.0);
  }
}

TEST_CASE("pearson_distance") {
  CHECK(pearson_distance(V{1.0, 2.0, 3.0}, V{2.0, 4.0, 6.0}) == 0.0);
  CHECK(pearson_distance(V{1.0, 2.0, 3.0}, V{3.0, 2.0, 1.0}) == 2.0);
  CHECK(pearson_distance(V{1.0, 2.0, 1.0, 2.0}, V{5.0, 5.0, 9.0, 9.0}) == 1.0);
}

TEST_CASE("distance dispatch") {
  const std::vector<double> x{0.5, 1.5, -0.5};
  CHECK(distance(DistanceKind::SquaredEuclidean, x, x) == 0.0);
  CHECK(distance(DistanceKind::Pearson, x, x) == 0.0);
  CHECK_THROWS_AS(distance(DistanceKind::Pearson, V{3.0, 3.0, 3.0}, x),
                  ConstantSeriesError);
}

TEST_CASE("pearson distance is invariant under shift and positive scaling") {
  SplitMix64 rng(77);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng.next_below(30);
    const std::vector<double> r = random_series(rng, n);
    const std::vector<double> s = random_series(rng, n);
    const double alpha = rng.next_unit() * 100.0 - 50.0;
    const double beta = 0.01 + rng.next_unit() * 20.0;
    const double gamma = rng.next_unit() * 100.0 - 50.0;
    const double delta = 0.01 + rng.next_unit() * 20.0;
    std::vector<double> r2(n), s2(n);
    for (std::size_t t = 0; t < n; ++t) {
      r2[t] = alpha + beta * r[t];
      s2[t] = gamma + delta * s[t];
    }
    CHECK(pearson_distance(r2, s2) ==
          doctest::Approx(pearson_distance(r, s)).epsilon(1e-9));
  }
}

TEST_CASE("normalized squared Euclidean equals a fixed multiple of the "
          "Pearson distance") {
  SplitMix64 rng(2718);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rng.next_below(127);
    const std::vector<double> r = random_series(rng, n);
    const std::vector<double> s = random_series(rng, n);
    const double d_p = pearson_distance(r, s);

    const NormalizedSeries r_pop =
        zscore_normalize(r, NormalizationConvention::PopulationSigma);
    const NormalizedSeries s_pop =
        zscore_normalize(s, NormalizationConvention::PopulationSigma);
    CHECK(std::abs(squared_euclidean(r_pop.samples, s_pop.samples) -
                   2.0 * static_cast<double>(n) * d_p) <= 1e-9 * n);

    const NormalizedSeries r_unit =
        zscore_normalize(r, NormalizationConvention::UnitNorm);
    const NormalizedSeries s_unit =
        zscore_normalize(s, NormalizationConvention::UnitNorm);
    CHECK(std::abs(squared_euclidean(r_unit.samples, s_unit.samples) -
                   2.0 * d_p) <= 1e-9);
  }
}

TEST_CASE("the constant factor preserves nearest-neighbor order") {
  SplitMix64 rng(314);
  int checked = 0;
  for (int rep = 0; rep < 300 && checked < 100; ++rep) {
    const std::size_t n = 2 + rng.next_below(30);
    const std::vector<double> q = random_series(rng, n);
    const std::vector<double> a = random_series(rng, n);
    const std::vector<double> b = random_series(rng, n);

    const double dp_a = pearson_distance(q, a);
    const double dp_b = pearson_distance(q, b);
    if (std::abs(dp_a - dp_b) <= 1e-9) continue;  // skip ties

    const auto nq = zscore_normalize(q, NormalizationConvention::UnitNorm);
    const auto na = zscore_normalize(a, NormalizationConvention::UnitNorm);
    const auto nb = zscore_normalize(b, NormalizationConvention::UnitNorm);
    const double de_a = squared_euclidean(nq.samples, na.samples);
    const double de_b = squared_euclidean(nq.samples, nb.samples);
    CHECK((de_a < de_b) == (dp_a < dp_b));
    ++checked;
  }
  CHECK(checked == 100);
}
