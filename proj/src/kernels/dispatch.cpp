#include <atomic>

#include "talebias/kernels.hpp"

namespace talebias::kernels {

namespace {

Backend detect() { return avx2_supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

bool avx2_supported() {
#if defined(TALEBIAS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

Backend select_backend(Backend wanted) {
  const Backend chosen =
      (wanted == Backend::avx2 && !avx2_supported()) ? Backend::scalar : wanted;
  current().store(chosen, std::memory_order_relaxed);
  return chosen;
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

#if defined(TALEBIAS_HAVE_AVX2)
#define TALEBIAS_DISPATCH(fn, ...)                 \
  (active_backend() == Backend::avx2 ? avx2::fn(__VA_ARGS__) \
                                     : scalar::fn(__VA_ARGS__))
#else
#define TALEBIAS_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double sum(std::span<const double> xs) { return TALEBIAS_DISPATCH(sum, xs); }

double sum_sq_dev(std::span<const double> xs, double center) {
  return TALEBIAS_DISPATCH(sum_sq_dev, xs, center);
}

CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy) {
  return TALEBIAS_DISPATCH(centered_cross, xs, ys, cx, cy);
}

void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out) {
  TALEBIAS_DISPATCH(accumulate_rows, rows, idx, weights, out);
}

#undef TALEBIAS_DISPATCH

}  // namespace talebias::kernels
