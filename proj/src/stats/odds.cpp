#include <algorithm>
#include <cmath>
#include <set>

#include "talebias/errors.hpp"
#include "talebias/stats.hpp"

namespace talebias {

double odds_ratio(std::int64_t m, std::int64_t m_rest, std::int64_t f, std::int64_t f_rest,
                  double smoothing) {
  if (!(smoothing >= 0.0) || std::isinf(smoothing)) {
    throw ConfigError("stats: smoothing must be a finite value >= 0");
  }
  if (m < 0 || m_rest < 0 || f < 0 || f_rest < 0) {
    throw AnalysisError("stats: negative count in odds ratio");
  }
  const double s = smoothing;
  const double num = (static_cast<double>(m) + s) * (static_cast<double>(f_rest) + s);
  const double den = (static_cast<double>(m_rest) + s) * (static_cast<double>(f) + s);
  if (num == 0.0 || den == 0.0) {
    throw AnalysisError("stats: odds ratio undefined (zero cell with smoothing 0)");
  }
  return num / den;
}

double odds_ratio(const EventFrequencyTable& male, const EventFrequencyTable& female,
                  std::string_view item, double smoothing) {
  const std::int64_t m = male.count(item);
  const std::int64_t f = female.count(item);
  if (m == 0 && f == 0) {
    throw AnalysisError("stats: item '" + std::string(item) + "' in neither table");
  }
  return odds_ratio(m, male.total - m, f, female.total - f, smoothing);
}

RankedOdds rank_by_odds(const EventFrequencyTable& male, const EventFrequencyTable& female,
                        std::int64_t min_total, std::size_t k, double smoothing) {
  if (k < 1) throw ConfigError("stats: top-k must be at least 1");
  std::set<std::string, std::less<>> items;
  for (const auto& [item, n] : male.counts) items.insert(item);
  for (const auto& [item, n] : female.counts) items.insert(item);

  std::vector<OddsRatioEntry> all;
  for (const std::string& item : items) {
    const std::int64_t m = male.count(item);
    const std::int64_t f = female.count(item);
    if (m + f < min_total) continue;
    all.push_back({item, m, f, odds_ratio(male, female, item, smoothing)});
  }

  RankedOdds out;
  auto take = [&](auto better) {
    std::vector<OddsRatioEntry> v = all;
    std::sort(v.begin(), v.end(), [&](const OddsRatioEntry& a, const OddsRatioEntry& b) {
      if (a.odds_ratio != b.odds_ratio) return better(a.odds_ratio, b.odds_ratio);
      return a.item < b.item;
    });
    if (v.size() > k) v.resize(k);
    return v;
  };
  out.male = take(std::greater<double>{});
  out.female = take(std::less<double>{});
  return out;
}

}  // namespace talebias
