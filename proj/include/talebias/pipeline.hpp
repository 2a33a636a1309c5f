#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "talebias/analysis.hpp"
#include "talebias/annotations.hpp"
#include "talebias/corpus.hpp"
#include "talebias/dataset.hpp"
#include "talebias/errors.hpp"
#include "talebias/moral.hpp"

namespace talebias {

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path metadata;
  std::filesystem::path lexicon;
  std::filesystem::path annotations;  // empty: rule-based fallback
  std::uint64_t seed = 0;
  double alpha = kDefaultAlpha;
  double smoothing = kDefaultSmoothing;
  std::int64_t min_total = 5;
  std::int64_t chain_min_total = 1;
  std::size_t top_k = 20;
  std::size_t window = 1;
  std::vector<std::string> anchors = kDefaultAnchors;
  std::filesystem::path out = "out";
  MoralMode mode = MoralMode::raw;
  Scope scope = Scope::lemma;
  bool exclude_no_moral = false;
  std::size_t workers = 1;
  std::filesystem::path indices;
  std::filesystem::path aliases;

  // Throws ConfigError on an out-of-range value.
  void validate() const;
};

// Characters of one story as dataset rows, in detection order. Characters
// with no mentions or an empty document are dropped.
std::vector<DatasetRow> process_story(const Story& story, const MoralLexicon& lexicon,
                                      const StoryAnnotations* annotations,
                                      std::uint64_t seed, Diagnostics& diag);

// Runs process_story over every story on `workers` threads. Output order
// and diagnostics are independent of the worker count.
std::vector<DatasetRow> build_rows(const std::vector<Story>& stories,
                                   const MoralLexicon& lexicon,
                                   const AnnotationBundle* bundle, std::uint64_t seed,
                                   std::size_t workers, Diagnostics& diag);

// Subcommands. Each returns normally or throws a talebias::Error.
void cmd_segment(const RunConfig& cfg);
void cmd_build(const RunConfig& cfg);
void cmd_moral(const RunConfig& cfg);
void cmd_events(const RunConfig& cfg);
void cmd_chains(const RunConfig& cfg);
void cmd_culture(const RunConfig& cfg);

// Paths inside the output directory.
std::filesystem::path dataset_path(const RunConfig& cfg);
std::filesystem::path manifest_path(const RunConfig& cfg);
// FNV-1a of the manifest bytes, embedded in every report.
std::string manifest_hash(const RunConfig& cfg);

// Report renderers (CSV and text), exposed for tests.
std::string moral_report_csv(const std::vector<GenderComparisonRow>& rows,
                             std::string_view manifest);
std::string moral_report_text(const std::vector<GenderComparisonRow>& rows, MoralMode mode,
                              double alpha, std::string_view manifest);
std::string ranking_report_csv(const RankedOdds& ranked, Scope scope,
                               std::string_view manifest);
std::string ranking_report_text(const RankedOdds& ranked, Scope scope,
                                std::string_view manifest);
std::string chain_report_csv(const std::vector<ChainRanking>& chains,
                             std::string_view manifest);
std::string chain_report_text(const std::vector<ChainRanking>& chains,
                              const std::vector<std::string>& warnings,
                              std::string_view manifest);
std::string culture_matrix_csv(const CultureReport& report, std::string_view manifest);
std::string culture_cells_csv(const CultureReport& report, std::string_view manifest);
std::string culture_report_text(const CultureReport& report, double alpha,
                                const std::vector<std::string>& warnings,
                                std::string_view manifest);

}  // namespace talebias
