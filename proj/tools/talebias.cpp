// talebias: gender-bias measurement over story corpora.
//
//   talebias build   --corpus DIR --metadata FILE --lexicon FILE --out DIR
//   talebias moral   --out DIR [--mode raw|events]
//   talebias events  --out DIR [--scope lemma|event_type]
//   talebias chains  --out DIR [--anchors marry,say,cry,beg] [--window 1]
//   talebias culture --out DIR --indices FILE [--aliases FILE]
//   talebias segment --corpus DIR --metadata FILE --out DIR
//
// Exit codes: 0 success, 1 analysis error, 2 I/O or configuration error.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "talebias/kernels.hpp"
#include "talebias/pipeline.hpp"

namespace {

using talebias::RunConfig;

void add_paths(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--corpus", cfg.corpus, "Directory of *.txt story files");
  cmd->add_option("--metadata", cfg.metadata, "Line-delimited JSON story metadata");
  cmd->add_option("--lexicon", cfg.lexicon, "Moral foundations lexicon CSV");
  cmd->add_option("--annotations", cfg.annotations, "AnnotationBundle JSONL file");
  cmd->add_option("--seed", cfg.seed, "Gender tie-break seed")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
}

void add_analysis(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "Significance level")->capture_default_str();
  cmd->add_option("--smoothing", cfg.smoothing, "Odds-ratio smoothing")->capture_default_str();
  cmd->add_option("--min-total", cfg.min_total, "Minimum m+f count for ranked events")
      ->capture_default_str();
  cmd->add_option("--chain-min-total", cfg.chain_min_total,
                  "Minimum m+f count for ranked neighbor events")
      ->capture_default_str();
  cmd->add_option("--top-k", cfg.top_k, "Ranking length")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gender-bias measurement over story corpora"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "raw";
  std::string scope = "lemma";
  std::string backend;

  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--backend", backend, "Kernel backend: scalar or avx2 (default: detect)")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  auto* segment = app.add_subcommand("segment", "Export segmented sentences for annotation");
  auto* build = app.add_subcommand("build", "Build the per-character dataset");
  auto* moral = app.add_subcommand("moral", "Moral scores by gender");
  auto* events = app.add_subcommand("events", "Gendered event rankings by odds ratio");
  auto* chains = app.add_subcommand("chains", "Neighboring events around anchor events");
  auto* culture = app.add_subcommand("culture", "Bias indices against culture indices");

  for (auto* cmd : {segment, build, moral, events, chains, culture}) {
    cmd->add_option("--out", cfg.out, "Output directory")->capture_default_str();
  }
  add_paths(segment, cfg);
  add_paths(build, cfg);
  for (auto* cmd : {moral, events, chains, culture}) add_analysis(cmd, cfg);

  moral->add_option("--mode", mode, "raw or events")
      ->check(CLI::IsMember({"raw", "events"}))
      ->capture_default_str();
  moral->add_flag("--exclude-no-moral", cfg.exclude_no_moral,
                  "Drop characters with no lexicon match");
  events->add_option("--scope", scope, "lemma or event_type")
      ->check(CLI::IsMember({"lemma", "event_type"}))
      ->capture_default_str();
  chains->add_option("--anchors", cfg.anchors, "Anchor lemmas")->delimiter(',');
  chains->add_option("--window", cfg.window, "Neighborhood size")->capture_default_str();
  culture->add_option("--indices", cfg.indices, "Culture indices CSV")->required();
  culture->add_option("--aliases", cfg.aliases, "Corpus culture to country aliases CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!backend.empty()) {
    talebias::kernels::select_backend(backend == "avx2" ? talebias::kernels::Backend::avx2
                                                        : talebias::kernels::Backend::scalar);
  }
  cfg.mode = *talebias::parse_moral_mode(mode);
  cfg.scope = scope == "lemma" ? talebias::Scope::lemma : talebias::Scope::event_type;

  try {
    if (*segment) talebias::cmd_segment(cfg);
    if (*build) talebias::cmd_build(cfg);
    if (*moral) talebias::cmd_moral(cfg);
    if (*events) talebias::cmd_events(cfg);
    if (*chains) talebias::cmd_chains(cfg);
    if (*culture) talebias::cmd_culture(cfg);
  } catch (const talebias::AnalysisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const talebias::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
