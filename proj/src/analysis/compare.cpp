#include <cmath>

#include "talebias/analysis.hpp"

namespace talebias {

std::string_view to_string(MoralMode m) {
  return m == MoralMode::raw ? "raw" : "events";
}

std::optional<MoralMode> parse_moral_mode(std::string_view s) {
  if (s == "raw") return MoralMode::raw;
  if (s == "events" || s == "events_only") return MoralMode::events_only;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::male: return "male";
    case Verdict::female: return "female";
    case Verdict::not_significant: break;
  }
  return "not significant";
}

const std::array<std::string, kMoralAttributes>& moral_attribute_names() {
  static const std::array<std::string, kMoralAttributes> names = [] {
    std::array<std::string, kMoralAttributes> n;
    for (std::size_t f = 0; f < kFoundations; ++f) {
      std::string cap(kFoundationNames[f]);
      cap[0] = static_cast<char>(cap[0] - 'a' + 'A');
      n[2 * f] = cap + "_p";
      n[2 * f + 1] = cap + "_sent";
    }
    n[10] = "Moral_nonmoral_ratio";
    return n;
  }();
  return names;
}

std::optional<double> moral_attribute(const MoralScore& s, std::size_t a) {
  if (a >= kMoralAttributes) return std::nullopt;
  if (a == 10) return s.moral_nonmoral_ratio;
  return a % 2 == 0 ? s.probability[a / 2] : s.sentiment[a / 2];
}

std::vector<GenderComparisonRow> compare_moral_by_gender(std::span<const DatasetRow> rows,
                                                         const CompareOptions& opts) {
  if (!(opts.alpha > 0.0 && opts.alpha < 1.0)) {
    throw ConfigError("analysis: alpha must lie in (0,1)");
  }
  std::vector<const MoralScore*> male, female;
  for (const DatasetRow& r : rows) {
    const MoralScore* s = nullptr;
    if (opts.mode == MoralMode::raw) {
      s = &r.moral;
    } else if (r.event_moral) {
      s = &*r.event_moral;
    }
    if (!s || (opts.exclude_no_moral && s->no_moral_content())) continue;
    (r.gender == Gender::male ? male : female).push_back(s);
  }
  if (male.empty()) throw AnalysisError("analysis: no scored male characters");
  if (female.empty()) throw AnalysisError("analysis: no scored female characters");

  std::vector<GenderComparisonRow> out;
  out.reserve(kMoralAttributes);
  for (std::size_t a = 0; a < kMoralAttributes; ++a) {
    GenderComparisonRow row;
    row.attribute = moral_attribute_names()[a];
    row.kind = (a % 2 == 0) ? "frequent" : "moral";
    auto collect = [&](const std::vector<const MoralScore*>& scores) {
      std::vector<double> v;
      v.reserve(scores.size());
      for (const MoralScore* s : scores) {
        if (auto x = moral_attribute(*s, a)) v.push_back(*x);
      }
      return v;
    };
    const std::vector<double> mv = collect(male);
    const std::vector<double> fv = collect(female);
    row.n_male = mv.size();
    row.n_female = fv.size();
    if (!mv.empty()) row.male_mean = mean(mv);
    if (!fv.empty()) row.female_mean = mean(fv);
    if (row.male_mean && row.female_mean && *row.female_mean != 0.0) {
      row.ratio = *row.male_mean / *row.female_mean;
    }
    try {
      row.test = welch_t_test(mv, fv, opts.alpha);
    } catch (const AnalysisError& e) {
      row.note = e.what();
      for (const auto& [from, to] : {std::pair{"sample a", "male sample"},
                                     std::pair{"sample b", "female sample"}}) {
        if (auto pos = row.note.find(from); pos != std::string::npos) {
          row.note.replace(pos, std::string_view(from).size(), to);
        }
      }
    }
    if (row.test && row.test->significant) {
      row.verdict = *row.male_mean > *row.female_mean ? Verdict::male : Verdict::female;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace talebias
