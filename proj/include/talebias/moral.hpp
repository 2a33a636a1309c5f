#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "talebias/kernels.hpp"
#include "talebias/types.hpp"

namespace talebias {

struct LexiconEntry {
  std::string word;
  std::array<double, kFoundations> probability{};
  std::array<double, kFoundations> sentiment{};
};

// Moral-foundations lexicon keyed by exact lowercase word. Immutable after
// construction; safe to share between threads.
class MoralLexicon {
 public:
  MoralLexicon() = default;
  // Throws ConfigError on a duplicate word or an out-of-range score.
  explicit MoralLexicon(std::vector<LexiconEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const LexiconEntry* find(std::string_view word) const;
  std::optional<std::uint32_t> index_of(std::string_view word) const;
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  // Row-major kRowWidth-wide score rows, in entry order.
  const double* rows() const { return rows_.data(); }

 private:
  std::vector<LexiconEntry> entries_;
  std::vector<double> rows_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Lexicon CSV columns: word, care_p, fairness_p, loyalty_p, authority_p,
// sanctity_p, care_sent, fairness_sent, loyalty_sent, authority_sent,
// sanctity_sent. Extra columns are ignored and column order is free.
// Missing file -> IoError; missing column or bad value -> ConfigError naming
// the row.
MoralLexicon load_lexicon(const std::filesystem::path& path);
MoralLexicon parse_lexicon(std::string_view csv_text);

// Scores a token list (no lemmatization). Probabilities and sentiments are
// means over matched tokens; ratio is matched/unmatched. Throws
// AnalysisError("moral: empty document") on an empty list.
MoralScore score_tokens(std::span<const std::string> tokens, const MoralLexicon& lex);

// Tokenizes and lowercases `document`, then scores it.
MoralScore score_document(std::string_view document, const MoralLexicon& lex);

// Scores already-lemmatized event lemmas.
MoralScore score_events_only(std::span<const std::string> lemmas,
                             const MoralLexicon& lex);

}  // namespace talebias
