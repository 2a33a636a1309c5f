#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talebias/types.hpp"

namespace talebias {

inline constexpr double kDefaultSmoothing = 0.5;
inline constexpr double kDefaultAlpha = 0.05;

// Regularized incomplete beta I_x(a, b), by continued fraction.
double incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double df);
// P(|T| >= |t|) for T ~ Student-t(df).
double student_t_two_tailed(double t, double df);
double normal_cdf(double x);

// Odds of an item in the male table over its odds in the female table:
//   ((m + s) / (M_rest + s)) / ((f + s) / (F_rest + s))
// where M_rest and F_rest are the table totals without the item. Evaluated
// as one quotient of two products. Throws AnalysisError if the ratio is 0 or
// unbounded (only possible with s = 0).
double odds_ratio(std::int64_t m, std::int64_t m_rest, std::int64_t f, std::int64_t f_rest,
                  double smoothing = kDefaultSmoothing);
// Table form. Throws AnalysisError if the item is in neither table.
double odds_ratio(const EventFrequencyTable& male, const EventFrequencyTable& female,
                  std::string_view item, double smoothing = kDefaultSmoothing);

struct OddsRatioEntry {
  std::string item;
  std::int64_t male_count = 0;
  std::int64_t female_count = 0;
  double odds_ratio = 1.0;
  bool operator==(const OddsRatioEntry&) const = default;
};

struct RankedOdds {
  std::vector<OddsRatioEntry> male;    // odds ratio descending
  std::vector<OddsRatioEntry> female;  // odds ratio ascending
};

// Items with m + f < min_total are dropped. Ties sort by item.
RankedOdds rank_by_odds(const EventFrequencyTable& male, const EventFrequencyTable& female,
                        std::int64_t min_total = 5, std::size_t k = 20,
                        double smoothing = kDefaultSmoothing);

struct TestResult {
  double statistic = 0.0;  // t for Welch, r for Pearson
  double p_value = 1.0;
  double df = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  bool significant = false;  // p_value < alpha
};

double mean(std::span<const double> xs);
// Unbiased sample variance; requires at least two values.
double sample_variance(std::span<const double> xs);

// Two-sided Welch t-test with Welch-Satterthwaite degrees of freedom.
// Throws AnalysisError naming the sample if it has fewer than 2 values or
// zero variance.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                        double alpha = kDefaultAlpha);

// Pearson r with a two-sided p from t = r sqrt((n-2)/(1-r^2)) on n-2 df.
// Requires equal lengths >= 3 and nonzero variance in both.
TestResult pearson(std::span<const double> xs, std::span<const double> ys,
                   double alpha = kDefaultAlpha);

}  // namespace talebias
