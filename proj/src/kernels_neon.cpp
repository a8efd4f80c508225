// NEON kernels for AArch64, where Advanced SIMD is architecturally baseline.

#include "tsclust/kernels.hpp"

#ifdef TSCLUST_KERNELS_HAVE_NEON

#include <arm_neon.h>

namespace tsclust::kernels::neon {

bool supported() noexcept { return true; }

double sum(std::span<const double> x) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(p + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(p + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vaddq_f64(acc0, vld1q_f64(p + i));
    i += 2;
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += p[i];
  return s;
}

double sum_squares(std::span<const double> x) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t v0 = vld1q_f64(p + i);
    const float64x2_t v1 = vld1q_f64(p + i + 2);
    acc0 = vfmaq_f64(acc0, v0, v0);
    acc1 = vfmaq_f64(acc1, v1, v1);
  }
  if (i + 2 <= n) {
    const float64x2_t v = vld1q_f64(p + i);
    acc0 = vfmaq_f64(acc0, v, v);
    i += 2;
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += p[i] * p[i];
  return s;
}

double sum_squared_diff(std::span<const double> x, double mu) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  const float64x2_t vmu = vdupq_n_f64(mu);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(p + i), vmu);
    acc = vfmaq_f64(acc, d, d);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = p[i] - mu;
    s += d * d;
  }
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(pa + i), vld1q_f64(pb + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(pa + i + 2), vld1q_f64(pb + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(pa + i), vld1q_f64(pb + i));
    i += 2;
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += pa[i] * pb[i];
  return s;
}

double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept {
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  const float64x2_t va = vdupq_n_f64(mu_a);
  const float64x2_t vb = vdupq_n_f64(mu_b);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t da = vsubq_f64(vld1q_f64(pa + i), va);
    const float64x2_t db = vsubq_f64(vld1q_f64(pb + i), vb);
    acc = vfmaq_f64(acc, da, db);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += (pa[i] - mu_a) * (pb[i] - mu_b);
  return s;
}

double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept {
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(pa + i), vld1q_f64(pb + i));
    const float64x2_t d1 =
        vsubq_f64(vld1q_f64(pa + i + 2), vld1q_f64(pb + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  if (i + 2 <= n) {
    const float64x2_t d = vsubq_f64(vld1q_f64(pa + i), vld1q_f64(pb + i));
    acc0 = vfmaq_f64(acc0, d, d);
    i += 2;
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = pa[i] - pb[i];
    s += d * d;
  }
  return s;
}

void add_inplace(std::span<double> acc, std::span<const double> x) noexcept {
  double* pa = acc.data();
  const double* px = x.data();
  const std::size_t n = acc.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(pa + i, vaddq_f64(vld1q_f64(pa + i), vld1q_f64(px + i)));
  }
  for (; i < n; ++i) pa[i] += px[i];
}

void scale_inplace(std::span<double> x, double factor) noexcept {
  double* p = x.data();
  const std::size_t n = x.size();
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(p + i, vmulq_f64(vld1q_f64(p + i), f));
  }
  for (; i < n; ++i) p[i] *= factor;
}

void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept {
  double* po = out.data();
  const double* pi = in.data();
  const std::size_t n = in.size();
  const float64x2_t vmu = vdupq_n_f64(mu);
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(po + i, vmulq_f64(vsubq_f64(vld1q_f64(pi + i), vmu), f));
  }
  for (; i < n; ++i) po[i] = (pi[i] - mu) * factor;
}

}  // namespace tsclust::kernels::neon

#endif  // TSCLUST_KERNELS_HAVE_NEON
