#include "talebias/moral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "talebias/corpus.hpp"
#include "talebias/csv.hpp"
#include "talebias/errors.hpp"

namespace talebias {

namespace {

std::string column_name(std::size_t f, bool sentiment) {
  return std::string(kFoundationNames[f]) + (sentiment ? "_sent" : "_p");
}

}  // namespace

MoralLexicon::MoralLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  rows_.assign(entries_.size() * kernels::kRowWidth, 0.0);
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LexiconEntry& e = entries_[i];
    for (std::size_t f = 0; f < kFoundations; ++f) {
      const double p = e.probability[f];
      const double s = e.sentiment[f];
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("moral: " + column_name(f, false) + " out of range [0,1] for '" +
                          e.word + "'");
      }
      if (!(s >= -1.0 && s <= 1.0)) {
        throw ConfigError("moral: " + column_name(f, true) + " out of range [-1,1] for '" +
                          e.word + "'");
      }
      rows_[i * kernels::kRowWidth + f] = p;
      rows_[i * kernels::kRowWidth + kFoundations + f] = s;
    }
    if (!index_.emplace(e.word, static_cast<std::uint32_t>(i)).second) {
      throw ConfigError("moral: duplicate lexicon key '" + e.word + "'");
    }
  }
}

const LexiconEntry* MoralLexicon::find(std::string_view word) const {
  const auto i = index_of(word);
  return i ? &entries_[*i] : nullptr;
}

std::optional<std::uint32_t> MoralLexicon::index_of(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MoralLexicon parse_lexicon(std::string_view csv_text) {
  const auto records = parse_csv(csv_text);
  if (records.empty()) throw ConfigError("moral: lexicon has no header");
  const CsvRecord& header = records.front();
  auto column = [&](const std::string& name) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == name) return c;
    }
    throw ConfigError("moral: lexicon missing column '" + name + "'");
  };
  const std::size_t word_col = column("word");
  std::array<std::size_t, kFoundations> p_col{}, s_col{};
  for (std::size_t f = 0; f < kFoundations; ++f) {
    p_col[f] = column(column_name(f, false));
    s_col[f] = column(column_name(f, true));
  }

  std::vector<LexiconEntry> entries;
  entries.reserve(records.size() - 1);
  std::map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    const std::string where = "moral: lexicon row " + std::to_string(r + 1);
    if (rec.size() < header.size()) {
      throw ConfigError(where + ": expected " + std::to_string(header.size()) +
                        " fields, got " + std::to_string(rec.size()));
    }
    LexiconEntry e;
    e.word = to_lower(rec[word_col]);
    if (e.word.empty()) throw ConfigError(where + ": empty word");
    if (auto [it, fresh] = seen.emplace(e.word, r + 1); !fresh) {
      throw ConfigError(where + ": duplicate lexicon key '" + e.word + "' (first at row " +
                        std::to_string(it->second) + ")");
    }
    for (std::size_t f = 0; f < kFoundations; ++f) {
      for (const bool sent : {false, true}) {
        const std::string& cell = rec[sent ? s_col[f] : p_col[f]];
        const auto v = parse_number(cell);
        const double lo = sent ? -1.0 : 0.0;
        if (!v || !(*v >= lo && *v <= 1.0)) {
          throw ConfigError(where + ": " + column_name(f, sent) + " = '" + cell +
                            "' out of range [" + (sent ? "-1" : "0") + ",1]");
        }
        (sent ? e.sentiment : e.probability)[f] = *v;
      }
    }
    entries.push_back(std::move(e));
  }
  return MoralLexicon(std::move(entries));
}

MoralLexicon load_lexicon(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw IoError("moral: cannot read lexicon " + path.string());
  }
  return parse_lexicon(text);
}

MoralScore score_tokens(std::span<const std::string> tokens, const MoralLexicon& lex) {
  if (tokens.empty()) throw AnalysisError("moral: empty document");
  std::map<std::uint32_t, std::size_t> hits;
  std::size_t matched = 0;
  for (const std::string& t : tokens) {
    if (auto i = lex.index_of(t)) {
      ++hits[*i];
      ++matched;
    }
  }
  MoralScore score;
  score.matched = matched;
  score.unmatched = tokens.size() - matched;
  if (matched == 0) {
    score.moral_nonmoral_ratio = 0.0;
    return score;
  }
  std::vector<std::uint32_t> idx;
  std::vector<double> weights;
  idx.reserve(hits.size());
  weights.reserve(hits.size());
  for (const auto& [i, n] : hits) {
    idx.push_back(i);
    weights.push_back(static_cast<double>(n));
  }
  std::array<double, kernels::kRowWidth> sums{};
  kernels::accumulate_rows(lex.rows(), idx, weights, sums.data());
  // Each mean is clamped to the range of the matched entries.
  std::array<double, kernels::kRowWidth> lo, hi;
  lo.fill(2.0);
  hi.fill(-2.0);
  for (const std::uint32_t i : idx) {
    const double* row = lex.rows() + static_cast<std::size_t>(i) * kernels::kRowWidth;
    for (std::size_t c = 0; c < 2 * kFoundations; ++c) {
      lo[c] = std::min(lo[c], row[c]);
      hi[c] = std::max(hi[c], row[c]);
    }
  }
  const double m = static_cast<double>(matched);
  auto mean = [&](std::size_t c) { return std::clamp(sums[c] / m, lo[c], hi[c]); };
  for (std::size_t f = 0; f < kFoundations; ++f) {
    score.probability[f] = mean(f);
    score.sentiment[f] = mean(kFoundations + f);
  }
  if (score.unmatched == 0) {
    score.moral_nonmoral_ratio = std::nullopt;
  } else {
    score.moral_nonmoral_ratio = m / static_cast<double>(score.unmatched);
  }
  return score;
}

MoralScore score_document(std::string_view document, const MoralLexicon& lex) {
  std::vector<std::string> words;
  for (Token& t : tokenize(document)) words.push_back(std::move(t.lower));
  return score_tokens(words, lex);
}

MoralScore score_events_only(std::span<const std::string> lemmas, const MoralLexicon& lex) {
  return score_tokens(lemmas, lex);
}

}  // namespace talebias
