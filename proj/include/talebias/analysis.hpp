#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talebias/dataset.hpp"
#include "talebias/errors.hpp"
#include "talebias/events.hpp"
#include "talebias/stats.hpp"

namespace talebias {

// ---- moral scores by gender ----

enum class MoralMode { raw, events_only };
std::string_view to_string(MoralMode m);
// "raw" or "events".
std::optional<MoralMode> parse_moral_mode(std::string_view s);

inline constexpr std::size_t kMoralAttributes = 11;
// Care_p, Care_sent, Fairness_p, ..., Sanctity_sent, Moral_nonmoral_ratio.
const std::array<std::string, kMoralAttributes>& moral_attribute_names();
// Value of attribute `a` (index into moral_attribute_names); nullopt for an
// undefined moral/non-moral ratio.
std::optional<double> moral_attribute(const MoralScore& s, std::size_t a);

enum class Verdict { male, female, not_significant };
std::string_view to_string(Verdict v);

struct GenderComparisonRow {
  std::string attribute;
  std::string kind;  // "frequent" for probabilities and the ratio, "moral" for sentiments
  std::optional<double> male_mean;
  std::optional<double> female_mean;
  std::optional<double> ratio;  // male_mean / female_mean
  std::optional<TestResult> test;
  std::string note;  // why `test` is absent
  Verdict verdict = Verdict::not_significant;
  std::size_t n_male = 0;
  std::size_t n_female = 0;
};

struct CompareOptions {
  MoralMode mode = MoralMode::raw;
  double alpha = kDefaultAlpha;
  // Drop characters whose score matched no lexicon word.
  bool exclude_no_moral = false;
};

// One row per moral attribute, in moral_attribute_names order. Welch t-test over the
// per-character values; verdict is the gender with the larger mean when
// p < alpha. In events_only mode characters without events are skipped.
// Throws AnalysisError if either gender has no scored characters.
std::vector<GenderComparisonRow> compare_moral_by_gender(std::span<const DatasetRow> rows,
                                                         const CompareOptions& opts = {});

// ---- event rankings ----

struct GenderedTables {
  EventFrequencyTable male;
  EventFrequencyTable female;
};

// Event lemma (or event type) counts per gender over all rows. In
// event_type scope untyped events are skipped; if every event is untyped it
// throws AnalysisError("analysis: event types unavailable in fallback mode").
GenderedTables gendered_event_tables(std::span<const DatasetRow> rows, Scope scope);

RankedOdds gendered_event_rankings(std::span<const DatasetRow> rows, Scope scope,
                                   std::size_t k = 20, std::int64_t min_total = 5,
                                   double smoothing = kDefaultSmoothing);

// ---- event chains ----

inline const std::vector<std::string> kDefaultAnchors = {"marry", "say", "cry", "beg"};

struct ChainOptions {
  std::vector<std::string> anchors = kDefaultAnchors;
  std::size_t window = 1;
  std::size_t k = 5;
  std::int64_t min_total = 1;
  double smoothing = kDefaultSmoothing;
};

struct ChainRanking {
  std::string anchor;
  Direction direction = Direction::before;
  std::int64_t male_anchor_occurrences = 0;
  std::int64_t female_anchor_occurrences = 0;
  RankedOdds ranked;
};

// Per anchor, the before and after rankings. Anchors absent from every
// sequence are skipped with a warning.
std::vector<ChainRanking> chain_analysis(std::span<const DatasetRow> rows,
                                         const ChainOptions& opts, Diagnostics& diag);

std::vector<GenderedSequence> gendered_sequences(std::span<const DatasetRow> rows);

// ---- femininity / masculinity ----

// Events in `female_lexicon` over events in `male_lexicon`; nullopt when the
// character has no male-lexicon events.
std::optional<double> femininity_score(std::span<const EventInstance> events,
                                       const std::set<std::string, std::less<>>& female_lexicon,
                                       const std::set<std::string, std::less<>>& male_lexicon);
// The reciprocal construction: male-lexicon events over female-lexicon events.
std::optional<double> masculinity_score(std::span<const EventInstance> events,
                                        const std::set<std::string, std::less<>>& female_lexicon,
                                        const std::set<std::string, std::less<>>& male_lexicon);

// ---- culture ----

inline constexpr std::size_t kCultureDims = 6;
inline constexpr std::array<std::string_view, kCultureDims> kCultureDimNames = {
    "PDI", "IDV", "MAS", "UAI", "LTO", "IND"};

struct CultureIndices {
  std::string culture;
  std::array<double, kCultureDims> values{};
};

// CSV columns culture, pdi, idv, mas, uai, lto, ind.
std::vector<CultureIndices> load_culture_indices(const std::filesystem::path& path);
// CSV columns corpus_culture, hofstede_country.
std::map<std::string, std::string, std::less<>> load_culture_aliases(
    const std::filesystem::path& path);

inline constexpr std::size_t kBiasIndices = 12;
// care_p_ratio ... sanctity_p_ratio, care_sent_diff ... sanctity_sent_diff,
// femininity, masculinity.
const std::array<std::string, kBiasIndices>& bias_index_names();

struct BiasIndexVector {
  std::string culture;
  std::size_t n_male = 0;
  std::size_t n_female = 0;
  std::array<std::optional<double>, kBiasIndices> values{};
};

struct CorrelationCell {
  std::optional<TestResult> result;
  std::string note;  // "zero variance", "fewer than 3 cultures", ...
  std::size_t n = 0;
};

struct CultureReport {
  std::vector<BiasIndexVector> cultures;  // sorted by culture name
  std::array<std::array<CorrelationCell, kCultureDims>, kBiasIndices> cells{};
  std::vector<std::string> female_lexicon;  // femininity lexicons used
  std::vector<std::string> male_lexicon;
};

struct CultureOptions {
  double alpha = kDefaultAlpha;
  std::size_t top_k = 20;  // size of the femininity/masculinity lexicons
  std::int64_t min_total = 5;
  double smoothing = kDefaultSmoothing;
  std::map<std::string, std::string, std::less<>> aliases;
};

// Rows tagged "unknown" are ignored; other tags pass through `aliases` and
// must name a culture in `indices`. The femininity lexicons are the top-k
// lemma rankings over the culture-tagged rows. Throws AnalysisError when
// fewer than 3 cultures have both genders.
CultureReport culture_correlations(std::span<const DatasetRow> rows,
                                   std::span<const CultureIndices> indices,
                                   const CultureOptions& opts, Diagnostics& diag);

}  // namespace talebias
