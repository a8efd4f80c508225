#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision kernels behind every distance, normalization and
// prototype update. Scalar reference implementations are always available;
// on x86-64 an AVX2+FMA variant and on AArch64 a NEON variant are compiled in
// and selected once at runtime. Within one process the selected backend never
// changes, so every reduction has a fixed order and results are reproducible.
//
// The environment variable TSCLUST_KERNELS=scalar|avx2|neon overrides the
// automatic choice (ignored when the requested backend is unavailable).

#if defined(__x86_64__) || defined(_M_X64)
#define TSCLUST_KERNELS_HAVE_AVX2 1
#endif
#if defined(__aarch64__)
#define TSCLUST_KERNELS_HAVE_NEON 1
#endif

namespace tsclust::kernels {

enum class Backend { Scalar, Avx2, Neon };

/// Backend selected for this process (after env override).
Backend active_backend() noexcept;
std::string_view backend_name(Backend) noexcept;

// Dispatched entry points. Sizes must agree where two spans are taken; the
// callers validate, the kernels assume.
double sum(std::span<const double> x) noexcept;
double sum_squares(std::span<const double> x) noexcept;
double sum_squared_diff(std::span<const double> x, double mu) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept;
double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept;
void add_inplace(std::span<double> acc, std::span<const double> x) noexcept;
void scale_inplace(std::span<double> x, double factor) noexcept;
// out[i] = (in[i] - mu) * factor
void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept;

// Scalar reference kernels. The dispatched functions above agree with these
// up to floating-point reduction order (bitwise for the element-wise ones).
namespace scalar {
double sum(std::span<const double> x) noexcept;
double sum_squares(std::span<const double> x) noexcept;
double sum_squared_diff(std::span<const double> x, double mu) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept;
double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept;
void add_inplace(std::span<double> acc, std::span<const double> x) noexcept;
void scale_inplace(std::span<double> x, double factor) noexcept;
void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept;
}  // namespace scalar

#ifdef TSCLUST_KERNELS_HAVE_AVX2
namespace avx2 {
bool supported() noexcept;
double sum(std::span<const double> x) noexcept;
double sum_squares(std::span<const double> x) noexcept;
double sum_squared_diff(std::span<const double> x, double mu) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept;
double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept;
void add_inplace(std::span<double> acc, std::span<const double> x) noexcept;
void scale_inplace(std::span<double> x, double factor) noexcept;
void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept;
}  // namespace avx2
#endif

#ifdef TSCLUST_KERNELS_HAVE_NEON
namespace neon {
bool supported() noexcept;
double sum(std::span<const double> x) noexcept;
double sum_squares(std::span<const double> x) noexcept;
double sum_squared_diff(std::span<const double> x, double mu) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept;
double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept;
void add_inplace(std::span<double> acc, std::span<const double> x) noexcept;
void scale_inplace(std::span<double> x, double factor) noexcept;
void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept;
}  // namespace neon
#endif

}  // namespace tsclust::kernels
