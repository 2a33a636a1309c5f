#include <algorithm>
#include <cmath>

#include "talebias/analysis.hpp"
#include "talebias/corpus.hpp"
#include "talebias/csv.hpp"

namespace talebias {

namespace {

std::size_t find_column(const CsvRecord& header, std::string_view name,
                        const std::string& file) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (to_lower(header[c]) == name) return c;
  }
  throw ConfigError("analysis: " + file + " lacks column '" + std::string(name) + "'");
}

std::vector<CsvRecord> read_table(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw IoError("analysis: cannot read " + path.string());
  }
  auto records = parse_csv(text);
  if (records.empty()) throw ConfigError("analysis: " + path.string() + " is empty");
  return records;
}

}  // namespace

std::vector<CultureIndices> load_culture_indices(const std::filesystem::path& path) {
  const auto records = read_table(path);
  const std::string file = path.string();
  const std::size_t name_col = find_column(records[0], "culture", file);
  std::array<std::size_t, kCultureDims> cols{};
  for (std::size_t d = 0; d < kCultureDims; ++d) {
    cols[d] = find_column(records[0], to_lower(kCultureDimNames[d]), file);
  }
  std::vector<CultureIndices> out;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    const std::string where = "analysis: " + file + " row " + std::to_string(r + 1);
    if (rec.size() < records[0].size()) throw ConfigError(where + ": missing fields");
    CultureIndices ci;
    ci.culture = rec[name_col];
    if (!seen.insert(ci.culture).second) {
      throw ConfigError(where + ": duplicate culture '" + ci.culture + "'");
    }
    for (std::size_t d = 0; d < kCultureDims; ++d) {
      const auto v = parse_number(rec[cols[d]]);
      if (!v || !std::isfinite(*v)) {
        throw ConfigError(where + ": bad " + std::string(kCultureDimNames[d]) + " value '" +
                          rec[cols[d]] + "'");
      }
      ci.values[d] = *v;
    }
    out.push_back(std::move(ci));
  }
  return out;
}

std::map<std::string, std::string, std::less<>> load_culture_aliases(
    const std::filesystem::path& path) {
  const auto records = read_table(path);
  const std::string file = path.string();
  const std::size_t from = find_column(records[0], "corpus_culture", file);
  const std::size_t to = find_column(records[0], "hofstede_country", file);
  std::map<std::string, std::string, std::less<>> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.size() < records[0].size()) {
      throw ConfigError("analysis: " + file + " row " + std::to_string(r + 1) +
                        ": missing fields");
    }
    out[rec[from]] = rec[to];
  }
  return out;
}

const std::array<std::string, kBiasIndices>& bias_index_names() {
  static const std::array<std::string, kBiasIndices> names = [] {
    std::array<std::string, kBiasIndices> n;
    for (std::size_t f = 0; f < kFoundations; ++f) {
      n[f] = std::string(kFoundationNames[f]) + "_p_ratio";
      n[kFoundations + f] = std::string(kFoundationNames[f]) + "_sent_diff";
    }
    n[10] = "femininity";
    n[11] = "masculinity";
    return n;
  }();
  return names;
}

CultureReport culture_correlations(std::span<const DatasetRow> rows,
                                   std::span<const CultureIndices> indices,
                                   const CultureOptions& opts, Diagnostics& diag) {
  std::map<std::string, const CultureIndices*, std::less<>> by_name;
  for (const CultureIndices& ci : indices) by_name[ci.culture] = &ci;

  std::map<std::string, std::vector<const DatasetRow*>, std::less<>> groups;
  std::set<std::string, std::less<>> unmatched;
  for (const DatasetRow& r : rows) {
    if (r.culture == kUnknownCulture || r.culture.empty()) continue;
    std::string culture = r.culture;
    if (auto it = opts.aliases.find(culture); it != opts.aliases.end()) culture = it->second;
    if (!by_name.contains(culture)) {
      unmatched.insert(r.culture);
      continue;
    }
    groups[culture].push_back(&r);
  }
  for (const std::string& c : unmatched) {
    diag.warn("analysis: no culture indices for '" + c + "'; rows skipped");
  }
  for (auto& [name, members] : groups) {
    std::sort(members.begin(), members.end(), [](const DatasetRow* a, const DatasetRow* b) {
      return std::tie(a->story_id, a->character_id) < std::tie(b->story_id, b->character_id);
    });
  }

  std::vector<DatasetRow> tagged;
  for (const auto& [name, members] : groups) {
    for (const DatasetRow* r : members) tagged.push_back(*r);
  }
  const RankedOdds lex = gendered_event_rankings(tagged, Scope::lemma, opts.top_k,
                                                 opts.min_total, opts.smoothing);
  CultureReport report;
  std::set<std::string, std::less<>> female_lex, male_lex;
  for (const auto& e : lex.female) {
    female_lex.insert(e.item);
    report.female_lexicon.push_back(e.item);
  }
  for (const auto& e : lex.male) {
    male_lex.insert(e.item);
    report.male_lexicon.push_back(e.item);
  }

  for (const auto& [name, members] : groups) {
    BiasIndexVector v;
    v.culture = name;
    std::array<std::vector<double>, 2 * kFoundations> male_vals, female_vals;
    std::vector<double> fem, masc;
    for (const DatasetRow* r : members) {
      const bool is_male = r->gender == Gender::male;
      auto& vals = is_male ? male_vals : female_vals;
      for (std::size_t f = 0; f < kFoundations; ++f) {
        vals[f].push_back(r->moral.probability[f]);
        vals[kFoundations + f].push_back(r->moral.sentiment[f]);
      }
      if (is_male) {
        ++v.n_male;
        if (auto s = masculinity_score(r->events, female_lex, male_lex)) masc.push_back(*s);
      } else {
        ++v.n_female;
        if (auto s = femininity_score(r->events, female_lex, male_lex)) fem.push_back(*s);
      }
    }
    if (v.n_male == 0 || v.n_female == 0) {
      diag.warn("analysis: culture '" + name + "' lacks one gender; skipped");
      continue;
    }
    for (std::size_t f = 0; f < kFoundations; ++f) {
      const double mp = mean(male_vals[f]);
      const double fp = mean(female_vals[f]);
      if (fp != 0.0) v.values[f] = mp / fp;
      v.values[kFoundations + f] =
          mean(male_vals[kFoundations + f]) - mean(female_vals[kFoundations + f]);
    }
    if (!fem.empty()) v.values[10] = mean(fem);
    if (!masc.empty()) v.values[11] = mean(masc);
    report.cultures.push_back(std::move(v));
  }
  if (report.cultures.size() < 3) {
    throw AnalysisError("analysis: culture correlation needs at least 3 cultures with both "
                        "genders, found " + std::to_string(report.cultures.size()));
  }

  for (std::size_t i = 0; i < kBiasIndices; ++i) {
    for (std::size_t d = 0; d < kCultureDims; ++d) {
      CorrelationCell& cell = report.cells[i][d];
      std::vector<double> xs, ys;
      for (const BiasIndexVector& v : report.cultures) {
        if (!v.values[i]) continue;
        xs.push_back(*v.values[i]);
        ys.push_back(by_name.at(v.culture)->values[d]);
      }
      cell.n = xs.size();
      if (cell.n < 3) {
        cell.note = "fewer than 3 cultures";
        continue;
      }
      try {
        cell.result = pearson(xs, ys, opts.alpha);
      } catch (const AnalysisError& e) {
        const std::string msg = e.what();
        cell.note = msg.find("zero variance") != std::string::npos ? "zero variance" : msg;
      }
    }
  }
  return report;
}

}  // namespace talebias
