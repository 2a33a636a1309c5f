#include "talebias/kernels.hpp"

#include <array>

namespace talebias::kernels::scalar {

namespace {

inline double combine(const std::array<double, 4>& lanes) {
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(std::span<const double> xs) {
  std::array<double, 4> lanes{};
  const std::size_t n = xs.size();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) lanes[j] += xs[i + j];
  }
  for (std::size_t j = 0; n4 + j < n; ++j) lanes[j] += xs[n4 + j];
  return combine(lanes);
}

double sum_sq_dev(std::span<const double> xs, double center) {
  std::array<double, 4> lanes{};
  const std::size_t n = xs.size();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = xs[i + j] - center;
      lanes[j] += d * d;
    }
  }
  for (std::size_t j = 0; n4 + j < n; ++j) {
    const double d = xs[n4 + j] - center;
    lanes[j] += d * d;
  }
  return combine(lanes);
}

CrossMoments centered_cross(std::span<const double> xs,
                            std::span<const double> ys, double cx, double cy) {
  std::array<double, 4> lxx{}, lyy{}, lxy{};
  const std::size_t n = xs.size() < ys.size() ? xs.size() : ys.size();
  const std::size_t n4 = n & ~std::size_t{3};
  auto step = [&](std::size_t i, std::size_t lane) {
    const double dx = xs[i] - cx;
    const double dy = ys[i] - cy;
    lxx[lane] += dx * dx;
    lyy[lane] += dy * dy;
    lxy[lane] += dx * dy;
  };
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) step(i + j, j);
  }
  for (std::size_t j = 0; n4 + j < n; ++j) step(n4 + j, j);
  return {combine(lxx), combine(lyy), combine(lxy)};
}

void accumulate_rows(const double* rows, std::span<const std::uint32_t> idx,
                     std::span<const double> weights, double* out) {
  std::array<double, kRowWidth> acc{};
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double* row = rows + static_cast<std::size_t>(idx[k]) * kRowWidth;
    const double w = weights[k];
    for (std::size_t c = 0; c < kRowWidth; ++c) acc[c] += w * row[c];
  }
  for (std::size_t c = 0; c < kRowWidth; ++c) out[c] = acc[c];
}

}  // namespace talebias::kernels::scalar
