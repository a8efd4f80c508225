// Runtime backend selection. The table is chosen once, on first use, and
// never changes afterwards within a process.

#include "tsclust/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tsclust::kernels {

namespace {

struct KernelTable {
  Backend backend;
  double (*sum)(std::span<const double>) noexcept;
  double (*sum_squares)(std::span<const double>) noexcept;
  double (*sum_squared_diff)(std::span<const double>, double) noexcept;
  double (*dot)(std::span<const double>, std::span<const double>) noexcept;
  double (*dot_centered)(std::span<const double>, double,
                         std::span<const double>, double) noexcept;
  double (*squared_distance)(std::span<const double>,
                             std::span<const double>) noexcept;
  void (*add_inplace)(std::span<double>, std::span<const double>) noexcept;
  void (*scale_inplace)(std::span<double>, double) noexcept;
  void (*center_scale)(std::span<double>, std::span<const double>, double,
                       double) noexcept;
};

constexpr KernelTable kScalarTable{
    Backend::Scalar,        scalar::sum,
    scalar::sum_squares,    scalar::sum_squared_diff,
    scalar::dot,            scalar::dot_centered,
    scalar::squared_distance, scalar::add_inplace,
    scalar::scale_inplace,  scalar::center_scale,
};

#ifdef TSCLUST_KERNELS_HAVE_AVX2
constexpr KernelTable kAvx2Table{
    Backend::Avx2,          avx2::sum,
    avx2::sum_squares,      avx2::sum_squared_diff,
    avx2::dot,              avx2::dot_centered,
    avx2::squared_distance, avx2::add_inplace,
    avx2::scale_inplace,    avx2::center_scale,
};
#endif

#ifdef TSCLUST_KERNELS_HAVE_NEON
constexpr KernelTable kNeonTable{
    Backend::Neon,          neon::sum,
    neon::sum_squares,      neon::sum_squared_diff,
    neon::dot,              neon::dot_centered,
    neon::squared_distance, neon::add_inplace,
    neon::scale_inplace,    neon::center_scale,
};
#endif

const KernelTable& select_table() {
  const char* env = std::getenv("TSCLUST_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return kScalarTable;
#ifdef TSCLUST_KERNELS_HAVE_AVX2
    if (std::strcmp(env, "avx2") == 0 && avx2::supported()) return kAvx2Table;
#endif
#ifdef TSCLUST_KERNELS_HAVE_NEON
    if (std::strcmp(env, "neon") == 0 && neon::supported()) return kNeonTable;
#endif
    // Unknown or unavailable request: fall through to auto-detection.
  }
#ifdef TSCLUST_KERNELS_HAVE_AVX2
  if (avx2::supported()) return kAvx2Table;
#endif
#ifdef TSCLUST_KERNELS_HAVE_NEON
  if (neon::supported()) return kNeonTable;
#endif
  return kScalarTable;
}

const KernelTable& table() {
  static const KernelTable& t = select_table();
  return t;
}

}  // namespace

Backend active_backend() noexcept { return table().backend; }

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

double sum(std::span<const double> x) noexcept { return table().sum(x); }

double sum_squares(std::span<const double> x) noexcept {
  return table().sum_squares(x);
}

double sum_squared_diff(std::span<const double> x, double mu) noexcept {
  return table().sum_squared_diff(x, mu);
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return table().dot(a, b);
}

double dot_centered(std::span<const double> a, double mu_a,
                    std::span<const double> b, double mu_b) noexcept {
  return table().dot_centered(a, mu_a, b, mu_b);
}

double squared_distance(std::span<const double> a,
                        std::span<const double> b) noexcept {
  return table().squared_distance(a, b);
}

void add_inplace(std::span<double> acc, std::span<const double> x) noexcept {
  table().add_inplace(acc, x);
}

void scale_inplace(std::span<double> x, double factor) noexcept {
  table().scale_inplace(x, factor);
}

void center_scale(std::span<double> out, std::span<const double> in, double mu,
                  double factor) noexcept {
  table().center_scale(out, in, mu, factor);
}

}  // namespace tsclust::kernels
