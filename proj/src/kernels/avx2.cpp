#include "talebias/kernels.hpp"

#include <immintrin.h>

#include <array>

// Compiled with -mavx2 only (no -mfma): the lane arithmetic must match the
// scalar reference exactly.

namespace talebias::kernels::avx2 {

namespace {

inline std::array<double, 4> spill(__m256d v) {
  alignas(32) std::array<double, 4> lanes;
  _mm256_store_pd(lanes.data(), v);
  return lanes;
}

inline double combine(const std::array<double, 4>& lanes) {
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const double* p = xs.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
  }
  auto lanes = spill(acc);
  for (std::size_t j = 0; n4 + j < n; ++j) lanes[j] += p[n4 + j];
  return combine(lanes);
}

double sum_sq_dev(std::span<const double> xs, double center) {
  const std::size_t n = xs.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const double* p = xs.data();
  const __m256d c = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), c);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  auto lanes = spill(acc);
  for (std::size_t j = 0; n4 + j < n; ++j) {
    const double d = p[n4 + j] - center;
    lanes[j] += d * d;
  }
  return combine(lanes);
}

CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy) {
  const std::size_t n = xs.size() < ys.size() ? xs.size() : ys.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const double* px = xs.data();
  const double* py = ys.data();
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  __m256d axx = _mm256_setzero_pd();
  __m256d ayy = _mm256_setzero_pd();
  __m256d axy = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + i), vcx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + i), vcy);
    axx = _mm256_add_pd(axx, _mm256_mul_pd(dx, dx));
    ayy = _mm256_add_pd(ayy, _mm256_mul_pd(dy, dy));
    axy = _mm256_add_pd(axy, _mm256_mul_pd(dx, dy));
  }
  auto lxx = spill(axx);
  auto lyy = spill(ayy);
  auto lxy = spill(axy);
  for (std::size_t j = 0; n4 + j < n; ++j) {
    const double dx = px[n4 + j] - cx;
    const double dy = py[n4 + j] - cy;
    lxx[j] += dx * dx;
    lyy[j] += dy * dy;
    lxy[j] += dx * dy;
  }
  return {combine(lxx), combine(lyy), combine(lxy)};
}

void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out) {
  static_assert(kRowWidth == 12);
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  __m256d a2 = _mm256_setzero_pd();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double* row = rows + static_cast<std::size_t>(idx[k]) * kRowWidth;
    const __m256d w = _mm256_set1_pd(weights[k]);
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(w, _mm256_loadu_pd(row)));
    a1 = _mm256_add_pd(a1, _mm256_mul_pd(w, _mm256_loadu_pd(row + 4)));
    a2 = _mm256_add_pd(a2, _mm256_mul_pd(w, _mm256_loadu_pd(row + 8)));
  }
  _mm256_storeu_pd(out, a0);
  _mm256_storeu_pd(out + 4, a1);
  _mm256_storeu_pd(out + 8, a2);
}

}  // namespace talebias::kernels::avx2
