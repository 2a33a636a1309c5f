#include <algorithm>
#include <cmath>

#include "talebias/errors.hpp"
#include "talebias/kernels.hpp"
#include "talebias/stats.hpp"

namespace talebias {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("stats: alpha must lie in (0,1)");
}

void check_finite(std::span<const double> xs, const char* name) {
  for (const double x : xs) {
    if (!std::isfinite(x)) {
      throw AnalysisError(std::string("stats: sample ") + name + " has a non-finite value");
    }
  }
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) throw AnalysisError("stats: mean of an empty sample");
  return kernels::sum(xs) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw AnalysisError("stats: variance needs at least 2 values");
  return kernels::sum_sq_dev(xs, mean(xs)) / static_cast<double>(xs.size() - 1);
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                        double alpha) {
  check_alpha(alpha);
  const std::pair<std::span<const double>, const char*> samples[] = {{a, "a"}, {b, "b"}};
  for (const auto& [xs, name] : samples) {
    if (xs.size() < 2) {
      throw AnalysisError(std::string("stats: sample ") + name + " has fewer than 2 values");
    }
    check_finite(xs, name);
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean(a);
  const double mb = mean(b);
  const double va = kernels::sum_sq_dev(a, ma) / (na - 1.0);
  const double vb = kernels::sum_sq_dev(b, mb) / (nb - 1.0);
  if (va == 0.0) throw AnalysisError("stats: sample a has zero variance");
  if (vb == 0.0) throw AnalysisError("stats: sample b has zero variance");

  const double qa = va / na;
  const double qb = vb / nb;
  const double se2 = qa + qb;
  TestResult r;
  r.statistic = (ma - mb) / std::sqrt(se2);
  r.df = (se2 * se2) / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  r.p_value = student_t_two_tailed(r.statistic, r.df);
  r.n_a = a.size();
  r.n_b = b.size();
  r.significant = r.p_value < alpha;
  return r;
}

TestResult pearson(std::span<const double> xs, std::span<const double> ys, double alpha) {
  check_alpha(alpha);
  if (xs.size() != ys.size()) {
    throw AnalysisError("stats: pearson length mismatch (" + std::to_string(xs.size()) +
                        " vs " + std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 3) throw AnalysisError("stats: pearson needs at least 3 pairs");
  check_finite(xs, "xs");
  check_finite(ys, "ys");
  const kernels::CrossMoments cm = kernels::centered_cross(xs, ys, mean(xs), mean(ys));
  if (cm.sxx == 0.0) throw AnalysisError("stats: xs has zero variance");
  if (cm.syy == 0.0) throw AnalysisError("stats: ys has zero variance");

  TestResult res;
  const double n = static_cast<double>(xs.size());
  res.statistic = std::clamp(cm.sxy / std::sqrt(cm.sxx * cm.syy), -1.0, 1.0);
  res.df = n - 2.0;
  const double r = res.statistic;
  if (std::fabs(r) == 1.0) {
    res.p_value = 0.0;
  } else {
    const double t = r * std::sqrt(res.df / ((1.0 - r) * (1.0 + r)));
    res.p_value = student_t_two_tailed(t, res.df);
  }
  res.n_a = xs.size();
  res.n_b = ys.size();
  res.significant = res.p_value < alpha;
  return res;
}

}  // namespace talebias
