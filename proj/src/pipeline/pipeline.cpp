#include "talebias/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "json.hpp"

#include "talebias/characters.hpp"
#include "talebias/csv.hpp"
#include "talebias/events.hpp"

namespace talebias {

namespace fs = std::filesystem;
using nlohmann::json;

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("config: alpha must lie in (0,1)");
  if (!(smoothing >= 0.0) || std::isinf(smoothing)) {
    throw ConfigError("config: smoothing must be >= 0");
  }
  if (top_k < 1) throw ConfigError("config: top-k must be at least 1");
  if (window < 1) throw ConfigError("config: window must be at least 1");
  if (min_total < 0 || chain_min_total < 0) {
    throw ConfigError("config: min-total must be >= 0");
  }
  if (workers < 1) throw ConfigError("config: workers must be at least 1");
}

std::vector<DatasetRow> process_story(const Story& story, const MoralLexicon& lexicon,
                                      const StoryAnnotations* annotations,
                                      std::uint64_t seed, Diagnostics& diag) {
  std::vector<DatasetRow> rows;
  static const std::vector<TemporalRelation> kNoRelations;
  const auto& relations = annotations ? annotations->relations : kNoRelations;
  for (DetectedCharacter& dc : detect_characters(story, annotations)) {
    if (dc.mentions.empty()) continue;
    CharacterRecord rec = make_character_record(story, std::move(dc), seed);
    rec.events = order_events(extract_events(story, rec, annotations), relations, diag);

    DatasetRow row;
    row.story_id = story.story_id;
    row.title = story.title;
    row.culture = story.culture;
    row.character_id = rec.character_id;
    row.character = rec.name;
    row.gender = rec.gender;
    row.appearances = rec.appearance_count;
    row.sentences = rec.document;
    try {
      row.moral = score_document(rec.document, lexicon);
    } catch (const AnalysisError&) {
      diag.warn("characters: " + story.story_id + "#" + rec.character_id +
                " has an empty document; dropped");
      continue;
    }
    if (!rec.events.empty()) {
      std::vector<std::string> lemmas;
      lemmas.reserve(rec.events.size());
      for (const EventInstance& e : rec.events) lemmas.push_back(e.lemma);
      row.event_moral = score_events_only(lemmas, lexicon);
    }
    row.events = std::move(rec.events);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DatasetRow> build_rows(const std::vector<Story>& stories,
                                   const MoralLexicon& lexicon,
                                   const AnnotationBundle* bundle, std::uint64_t seed,
                                   std::size_t workers, Diagnostics& diag) {
  struct Slot {
    std::vector<DatasetRow> rows;
    Diagnostics diag;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(stories.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < stories.size(); i = next++) {
      Slot& slot = slots[i];
      try {
        const Story& story = stories[i];
        const StoryAnnotations* ann = nullptr;
        if (bundle) {
          ann = bundle->find(story.story_id);
          if (!ann) {
            slot.diag.warn("annotations: no entry for " + story.story_id +
                           "; using rule-based fallback");
          } else {
            if (ann->error) {
              slot.diag.warn("annotations: " + story.story_id + ": adapter error: " +
                             *ann->error);
            }
            const auto problems = validate_annotations(*ann, story);
            if (!problems.empty()) {
              throw ConfigError("annotations: " + story.story_id + ": " + problems.front());
            }
          }
        }
        slot.rows = process_story(story, lexicon, ann, seed, slot.diag);
      } catch (...) {
        slot.error = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(workers, stories.size()));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  std::vector<DatasetRow> rows;
  for (Slot& slot : slots) {
    if (slot.error) std::rethrow_exception(slot.error);
    for (std::string& w : slot.diag.warnings) diag.warn(std::move(w));
    for (DatasetRow& r : slot.rows) rows.push_back(std::move(r));
  }
  if (bundle) {
    std::set<std::string, std::less<>> ids;
    for (const Story& s : stories) ids.insert(s.story_id);
    for (const auto& [id, ann] : bundle->stories) {
      if (!ids.contains(id)) diag.warn("annotations: " + id + " is not in the corpus");
    }
  }
  return rows;
}

fs::path dataset_path(const RunConfig& cfg) { return cfg.out / "dataset.csv"; }
fs::path manifest_path(const RunConfig& cfg) { return cfg.out / "manifest.json"; }

std::string manifest_hash(const RunConfig& cfg) {
  std::string bytes;
  try {
    bytes = read_file(manifest_path(cfg));
  } catch (const IoError&) {
    throw IoError("cli: no manifest at " + manifest_path(cfg).string() +
                  " (run `build` first)");
  }
  return fnv1a_hex(bytes);
}

namespace {

CorpusLoad load_stories(const RunConfig& cfg) {
  if (cfg.corpus.empty()) throw ConfigError("config: --corpus is required");
  return load_corpus(cfg.corpus, cfg.metadata);
}

void ensure_out(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw IoError("cli: cannot create " + cfg.out.string() + ": " + ec.message());
}

}  // namespace

void cmd_segment(const RunConfig& cfg) {
  cfg.validate();
  const CorpusLoad corpus = load_stories(cfg);
  ensure_out(cfg);
  write_file(cfg.out / "segmentation.jsonl", export_segmentation(corpus.stories));
}

void cmd_build(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.lexicon.empty()) throw ConfigError("config: --lexicon is required");
  const MoralLexicon lexicon = load_lexicon(cfg.lexicon);
  const CorpusLoad corpus = load_stories(cfg);
  std::optional<AnnotationBundle> bundle;
  if (!cfg.annotations.empty()) bundle = load_annotation_bundle(cfg.annotations);

  Diagnostics diag;
  const std::vector<DatasetRow> rows = build_rows(
      corpus.stories, lexicon, bundle ? &*bundle : nullptr, cfg.seed, cfg.workers, diag);

  ensure_out(cfg);
  write_dataset(rows, dataset_path(cfg));
  write_file(cfg.out / "segmentation.jsonl", export_segmentation(corpus.stories));

  std::map<std::string, std::map<std::string, std::int64_t>> by_culture;
  std::int64_t male = 0, female = 0;
  for (const DatasetRow& r : rows) {
    (r.gender == Gender::male ? male : female)++;
    by_culture[r.culture][std::string(to_string(r.gender))]++;
  }
  std::size_t tagged_stories = 0;
  for (const Story& s : corpus.stories) tagged_stories += s.culture != kUnknownCulture;

  json m;
  m["tool"] = "talebias";
  m["config"] = {
      {"corpus", cfg.corpus.generic_string()},
      {"metadata", cfg.metadata.generic_string()},
      {"lexicon", cfg.lexicon.generic_string()},
      {"annotations", cfg.annotations.empty() ? json(nullptr)
                                              : json(cfg.annotations.generic_string())},
      {"seed", cfg.seed},
  };
  m["seed"] = cfg.seed;
  m["mode"] = bundle ? "annotations" : "fallback";
  m["counts"] = {
      {"stories", corpus.stories.size()},
      {"stories_with_culture", tagged_stories},
      {"characters", rows.size()},
      {"male", male},
      {"female", female},
      {"by_culture", by_culture},
  };
  m["lexicon_entries"] = lexicon.size();
  if (bundle && !bundle->header.empty()) m["annotation_header"] = json::parse(bundle->header);
  m["errors"] = corpus.errors;
  m["warnings"] = diag.warnings;
  m["dataset_fnv1a"] = fnv1a_hex(read_file(dataset_path(cfg)));
  m["events_fnv1a"] = fnv1a_hex(read_file(events_sibling_path(dataset_path(cfg))));
  write_file(manifest_path(cfg), m.dump(2) + "\n");
}

}  // namespace talebias
