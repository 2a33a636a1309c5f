#pragma once

// Arithmetic inner loops shared by the moral scorer and the statistics code.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. Both use the same 4-lane blocked reduction order (element i goes
// to lane i % 4, the tail is folded into lanes 0..2, lanes are combined as
// (l0 + l1) + (l2 + l3)), so the two variants return identical bits. The
// public entry points dispatch to the best variant the CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace talebias::kernels {

// Width of one lexicon row: 5 probabilities, 5 sentiments, 2 padding lanes.
inline constexpr std::size_t kRowWidth = 12;

struct CrossMoments {
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
};

enum class Backend { scalar, avx2 };

// Sum of all elements.
double sum(std::span<const double> xs);

// Sum of (x - center)^2.
double sum_sq_dev(std::span<const double> xs, double center);

// Centered second moments of paired samples; xs and ys must have equal size.
CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy);

// out[c] = sum over k of weights[k] * rows[idx[k] * kRowWidth + c],
// accumulated in index order, for c in [0, kRowWidth). idx and weights have
// equal size.
void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out);

Backend active_backend();
// Forces a backend; requesting avx2 on a CPU without it falls back to scalar.
// Returns the backend actually selected.
Backend select_backend(Backend wanted);
bool avx2_supported();
std::string_view backend_name(Backend b);

namespace scalar {
double sum(std::span<const double> xs);
double sum_sq_dev(std::span<const double> xs, double center);
CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy);
void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out);
}  // namespace scalar

#if defined(TALEBIAS_HAVE_AVX2)
namespace avx2 {
double sum(std::span<const double> xs);
double sum_sq_dev(std::span<const double> xs, double center);
CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy);
void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out);
}  // namespace avx2
#endif

}  // namespace talebias::kernels
