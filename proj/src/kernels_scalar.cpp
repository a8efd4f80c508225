#include "tsclust/kernels.hpp"

namespace tsclust::kernels::scalar {

double sum(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double sum_squares(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double sum_squared_diff(std::span<const double> x, double mu) noexcept {
  double s = 0.0;
  for (double v : x) {
    const double d = v - mu;
    s += d * d;
  }
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - mu_a) * (b[i] - mu_b);
  return s;
}

double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void add_inplace(std::span<double> acc, std::span<const double> x) noexcept {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

void scale_inplace(std::span<double> x, double factor) noexcept {
  for (double& v : x) v *= factor;
}

void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = (in[i] - mu) * factor;
}

}  // namespace tsclust::kernels::scalar
