// AVX2+FMA kernels. This translation unit is compiled with -mavx2 -mfma; the
// dispatcher only routes here after the CPUID check in kernels.cpp.

#include "tsclust/kernels.hpp"

#ifdef TSCLUST_KERNELS_HAVE_AVX2

#include <immintrin.h>

namespace tsclust::kernels::avx2 {

namespace {

// Fixed horizontal order: (l0 + l2) + (l1 + l3).
inline double hsum(__m256d v) noexcept {
  double lanes[4];
  _mm256_storeu_pd(lanes, v);
  return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

}  // namespace

bool supported() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

double sum(std::span<const double> x) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(p + i + 4));
  }
  if (i + 4 <= n) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += p[i];
  return s;
}

double sum_squares(std::span<const double> x) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(p + i);
    const __m256d v1 = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  if (i + 4 <= n) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += p[i] * p[i];
  return s;
}

double sum_squared_diff(std::span<const double> x, double mu) noexcept {
  const double* p = x.data();
  const std::size_t n = x.size();
  const __m256d vmu = _mm256_set1_pd(mu);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(p + i), vmu);
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(p + i + 4), vmu);
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  if (i + 4 <= n) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), vmu);
    acc0 = _mm256_fmadd_pd(d, d, acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
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
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 4),
                           _mm256_loadu_pd(pb + i + 4), acc1);
  }
  if (i + 4 <= n) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i),
                           acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += pa[i] * pb[i];
  return s;
}

double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept {
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  const __m256d va = _mm256_set1_pd(mu_a);
  const __m256d vb = _mm256_set1_pd(mu_b);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d da0 = _mm256_sub_pd(_mm256_loadu_pd(pa + i), va);
    const __m256d db0 = _mm256_sub_pd(_mm256_loadu_pd(pb + i), vb);
    const __m256d da1 = _mm256_sub_pd(_mm256_loadu_pd(pa + i + 4), va);
    const __m256d db1 = _mm256_sub_pd(_mm256_loadu_pd(pb + i + 4), vb);
    acc0 = _mm256_fmadd_pd(da0, db0, acc0);
    acc1 = _mm256_fmadd_pd(da1, db1, acc1);
  }
  if (i + 4 <= n) {
    const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(pa + i), va);
    const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(pb + i), vb);
    acc0 = _mm256_fmadd_pd(da, db, acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += (pa[i] - mu_a) * (pb[i] - mu_b);
  return s;
}

double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept {
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 =
        _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
    const __m256d d1 =
        _mm256_sub_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4));
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  if (i + 4 <= n) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
    acc0 = _mm256_fmadd_pd(d, d, acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
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
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        pa + i, _mm256_add_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(px + i)));
  }
  for (; i < n; ++i) pa[i] += px[i];
}

void scale_inplace(std::span<double> x, double factor) noexcept {
  double* p = x.data();
  const std::size_t n = x.size();
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
  }
  for (; i < n; ++i) p[i] *= factor;
}

void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept {
  double* po = out.data();
  const double* pi = in.data();
  const std::size_t n = in.size();
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pi + i), vmu);
    _mm256_storeu_pd(po + i, _mm256_mul_pd(d, f));
  }
  for (; i < n; ++i) po[i] = (pi[i] - mu) * factor;
}

}  // namespace tsclust::kernels::avx2

#endif  // TSCLUST_KERNELS_HAVE_AVX2
