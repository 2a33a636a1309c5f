#include <cstdio>
#include <sstream>

#include "talebias/csv.hpp"
#include "talebias/pipeline.hpp"

namespace talebias {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string opt_fixed(const std::optional<double>& v, int precision) {
  return v ? fixed(*v, precision) : std::string("n/a");
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) write_csv_row(out, r);
  return out.str();
}

std::string scope_name(Scope s) { return s == Scope::lemma ? "lemma" : "event_type"; }

std::string join(const std::vector<OddsRatioEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.item;
  }
  return out.empty() ? "(none)" : out;
}

std::string capitalized(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

std::vector<DatasetRow> load_rows(const RunConfig& cfg) {
  return read_dataset(dataset_path(cfg));
}

}  // namespace

std::string moral_report_csv(const std::vector<GenderComparisonRow>& rows,
                             std::string_view manifest) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"attribute", "male", "female", "ratio_m_f", "p_value", "t_statistic", "df",
                 "n_male", "n_female", "verdict", "note", "manifest"});
  for (const GenderComparisonRow& r : rows) {
    out.push_back({r.attribute, opt_number(r.male_mean), opt_number(r.female_mean),
                   opt_number(r.ratio),
                   r.test ? format_number(r.test->p_value) : "",
                   r.test ? format_number(r.test->statistic) : "",
                   r.test ? format_number(r.test->df) : "", std::to_string(r.n_male),
                   std::to_string(r.n_female), std::string(to_string(r.verdict)), r.note,
                   std::string(manifest)});
  }
  return csv(out);
}

std::string moral_report_text(const std::vector<GenderComparisonRow>& rows, MoralMode mode,
                              double alpha, std::string_view manifest) {
  std::ostringstream out;
  out << "Gender difference in moral foundation scores ("
      << (mode == MoralMode::raw ? "raw text" : "event trigger words") << ")\n";
  out << "manifest " << manifest << "\n\n";
  const std::string alpha_s = format_number(alpha);
  out << pad("Attributes (Avg)", 22) << pad("Male", 10) << pad("Female", 10)
      << pad("Ratio (M/F)", 13) << pad("p-value", 16) << pad("t-statistic", 13)
      << "More mention/moral\n";
  for (const GenderComparisonRow& r : rows) {
    std::string p = "n/a";
    std::string t = "n/a";
    if (r.test) {
      p = (r.test->p_value < alpha ? "<" : ">=") + alpha_s + " (" +
          fixed(r.test->p_value, 4) + ")";
      t = fixed(r.test->statistic, 1);
    }
    out << pad(r.attribute, 22) << pad(opt_fixed(r.male_mean, 4), 10)
        << pad(opt_fixed(r.female_mean, 4), 10) << pad(opt_fixed(r.ratio, 4), 13)
        << pad(p, 16) << pad(t, 13) << to_string(r.verdict) << "(" << r.kind << ")";
    if (!r.note.empty()) out << "  [" << r.note << "]";
    out << "\n";
  }
  if (!rows.empty()) {
    out << "\n" << rows.front().n_male << " male and " << rows.front().n_female
        << " female characters scored.\n";
  }
  return out.str();
}

std::string ranking_report_csv(const RankedOdds& ranked, Scope scope,
                               std::string_view manifest) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"scope", "gender", "rank", "item", "male_count", "female_count",
                 "odds_ratio", "manifest"});
  for (const auto& [gender, list] :
       {std::pair{"male", &ranked.male}, std::pair{"female", &ranked.female}}) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      const OddsRatioEntry& e = (*list)[i];
      out.push_back({scope_name(scope), gender, std::to_string(i + 1), e.item,
                     std::to_string(e.male_count), std::to_string(e.female_count),
                     format_number(e.odds_ratio), std::string(manifest)});
    }
  }
  return csv(out);
}

std::string ranking_report_text(const RankedOdds& ranked, Scope scope,
                                std::string_view manifest) {
  std::ostringstream out;
  out << "Top " << (scope == Scope::lemma ? "events" : "event types")
      << " for male and female characters (selected by odds ratio)\n";
  out << "manifest " << manifest << "\n\n";
  out << pad("Gender", 8) << "Top " << std::max(ranked.male.size(), ranked.female.size())
      << "\n";
  out << pad("Male", 8) << join(ranked.male) << "\n";
  out << pad("Female", 8) << join(ranked.female) << "\n";
  return out.str();
}

std::string chain_report_csv(const std::vector<ChainRanking>& chains,
                             std::string_view manifest) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"anchor", "direction", "gender", "rank", "item", "male_count",
                 "female_count", "odds_ratio", "male_anchor_count", "female_anchor_count",
                 "manifest"});
  for (const ChainRanking& c : chains) {
    for (const auto& [gender, list] :
         {std::pair{"male", &c.ranked.male}, std::pair{"female", &c.ranked.female}}) {
      for (std::size_t i = 0; i < list->size(); ++i) {
        const OddsRatioEntry& e = (*list)[i];
        out.push_back({c.anchor, std::string(to_string(c.direction)), gender,
                       std::to_string(i + 1), e.item, std::to_string(e.male_count),
                       std::to_string(e.female_count), format_number(e.odds_ratio),
                       std::to_string(c.male_anchor_occurrences),
                       std::to_string(c.female_anchor_occurrences), std::string(manifest)});
      }
    }
  }
  return csv(out);
}

std::string chain_report_text(const std::vector<ChainRanking>& chains,
                              const std::vector<std::string>& warnings,
                              std::string_view manifest) {
  std::ostringstream out;
  out << "Top neighboring events before and after selected events (selected by odds ratio)\n";
  out << "manifest " << manifest << "\n\n";
  for (const ChainRanking& c : chains) {
    const std::string label = capitalized(to_string(c.direction)) + " " + c.anchor;
    out << pad(label, 20) << pad("Male", 8) << join(c.ranked.male) << "\n";
    out << pad("", 20) << pad("Female", 8) << join(c.ranked.female) << "\n";
    out << pad("", 20) << "anchor occurrences: male " << c.male_anchor_occurrences
        << ", female " << c.female_anchor_occurrences << "\n";
  }
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string culture_matrix_csv(const CultureReport& report, std::string_view manifest) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> header{"bias_index"};
  for (const auto d : kCultureDimNames) header.emplace_back(d);
  header.emplace_back("manifest");
  out.push_back(header);
  for (std::size_t i = 0; i < kBiasIndices; ++i) {
    std::vector<std::string> row{bias_index_names()[i]};
    for (std::size_t d = 0; d < kCultureDims; ++d) {
      const CorrelationCell& c = report.cells[i][d];
      row.push_back(c.result ? format_number(c.result->statistic) : c.note);
    }
    row.emplace_back(manifest);
    out.push_back(std::move(row));
  }
  return csv(out);
}

std::string culture_cells_csv(const CultureReport& report, std::string_view manifest) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"bias_index", "dimension", "r", "p_value", "n", "significant", "note",
                 "manifest"});
  for (std::size_t i = 0; i < kBiasIndices; ++i) {
    for (std::size_t d = 0; d < kCultureDims; ++d) {
      const CorrelationCell& c = report.cells[i][d];
      out.push_back({bias_index_names()[i], std::string(kCultureDimNames[d]),
                     c.result ? format_number(c.result->statistic) : "",
                     c.result ? format_number(c.result->p_value) : "", std::to_string(c.n),
                     c.result ? (c.result->significant ? "true" : "false") : "", c.note,
                     std::string(manifest)});
    }
  }
  return csv(out);
}

std::string culture_report_text(const CultureReport& report, double alpha,
                                const std::vector<std::string>& warnings,
                                std::string_view manifest) {
  std::ostringstream out;
  out << "Pearson correlation of gender bias indices with culture indices\n";
  out << "manifest " << manifest << "\n\n";
  out << "Per-culture bias indices\n";
  out << pad("culture", 18) << pad("male", 6) << pad("female", 8);
  for (const auto& n : bias_index_names()) out << pad(n, 20);
  out << "\n";
  for (const BiasIndexVector& v : report.cultures) {
    out << pad(v.culture, 18) << pad(std::to_string(v.n_male), 6)
        << pad(std::to_string(v.n_female), 8);
    for (const auto& x : v.values) out << pad(opt_fixed(x, 4), 20);
    out << "\n";
  }
  out << "\nr (p) per bias index and dimension; * marks p < " << format_number(alpha) << "\n";
  out << pad("bias index", 20);
  for (const auto d : kCultureDimNames) out << pad(std::string(d), 18);
  out << "\n";
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < kBiasIndices; ++i) {
    out << pad(bias_index_names()[i], 20);
    for (std::size_t d = 0; d < kCultureDims; ++d) {
      const CorrelationCell& c = report.cells[i][d];
      std::string cell = "n/a";
      if (!c.result) {
        notes.push_back(bias_index_names()[i] + " x " + std::string(kCultureDimNames[d]) +
                        ": " + c.note);
      } else {
        cell = fixed(c.result->statistic, 3) + " (" + fixed(c.result->p_value, 3) + ")" +
               (c.result->significant ? "*" : "");
      }
      out << pad(cell, 18);
    }
    out << "\n";
  }
  for (const std::string& n : notes) out << "n/a " << n << "\n";
  auto words = [](const std::vector<std::string>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ", ") + w;
    return s.empty() ? std::string("(none)") : s;
  };
  out << "\nfemininity lexicon (female top events): " << words(report.female_lexicon);
  out << "\nmasculinity lexicon (male top events): " << words(report.male_lexicon) << "\n";
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

void cmd_moral(const RunConfig& cfg) {
  cfg.validate();
  const std::string manifest = manifest_hash(cfg);
  const auto rows = load_rows(cfg);
  CompareOptions opts;
  opts.mode = cfg.mode;
  opts.alpha = cfg.alpha;
  opts.exclude_no_moral = cfg.exclude_no_moral;
  const auto table = compare_moral_by_gender(rows, opts);
  const std::string stem = "moral_" + std::string(to_string(cfg.mode));
  write_file(cfg.out / (stem + ".csv"), moral_report_csv(table, manifest));
  write_file(cfg.out / (stem + ".txt"), moral_report_text(table, cfg.mode, cfg.alpha, manifest));
}

void cmd_events(const RunConfig& cfg) {
  cfg.validate();
  const std::string manifest = manifest_hash(cfg);
  const auto rows = load_rows(cfg);
  const RankedOdds ranked =
      gendered_event_rankings(rows, cfg.scope, cfg.top_k, cfg.min_total, cfg.smoothing);
  const std::string stem = "events_" + scope_name(cfg.scope);
  write_file(cfg.out / (stem + ".csv"), ranking_report_csv(ranked, cfg.scope, manifest));
  write_file(cfg.out / (stem + ".txt"), ranking_report_text(ranked, cfg.scope, manifest));
}

void cmd_chains(const RunConfig& cfg) {
  cfg.validate();
  const std::string manifest = manifest_hash(cfg);
  const auto rows = load_rows(cfg);
  ChainOptions opts;
  opts.anchors = cfg.anchors;
  opts.window = cfg.window;
  opts.k = std::min<std::size_t>(cfg.top_k, 5);
  opts.min_total = cfg.chain_min_total;
  opts.smoothing = cfg.smoothing;
  Diagnostics diag;
  const auto chains = chain_analysis(rows, opts, diag);
  write_file(cfg.out / "chains.csv", chain_report_csv(chains, manifest));
  write_file(cfg.out / "chains.txt", chain_report_text(chains, diag.warnings, manifest));
}

void cmd_culture(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.indices.empty()) throw ConfigError("config: --indices is required");
  const std::string manifest = manifest_hash(cfg);
  const auto rows = load_rows(cfg);
  const auto indices = load_culture_indices(cfg.indices);
  CultureOptions opts;
  opts.alpha = cfg.alpha;
  opts.top_k = cfg.top_k;
  opts.min_total = cfg.min_total;
  opts.smoothing = cfg.smoothing;
  if (!cfg.aliases.empty()) opts.aliases = load_culture_aliases(cfg.aliases);
  Diagnostics diag;
  const CultureReport report = culture_correlations(rows, indices, opts, diag);
  write_file(cfg.out / "culture.csv", culture_matrix_csv(report, manifest));
  write_file(cfg.out / "culture_cells.csv", culture_cells_csv(report, manifest));
  write_file(cfg.out / "culture.txt",
             culture_report_text(report, cfg.alpha, diag.warnings, manifest));
}

}  // namespace talebias
