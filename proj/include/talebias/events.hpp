#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talebias/annotations.hpp"
#include "talebias/characters.hpp"
#include "talebias/errors.hpp"
#include "talebias/types.hpp"

namespace talebias {

// Dictionary lemmatizer for verbs: irregular table first, then -ed/-ing/-s
// suffix rules with consonant undoubling and silent-e restoration.
std::string lemmatize_verb(std::string_view lower_word);

// Lowercases and lemmatizes the first word of `trigger`; nullopt if the
// lemma is a stopword or auxiliary.
std::optional<std::string> normalize_event(std::string_view trigger);

// Events held by `character` in its own sentences. With annotations, only
// events where the character fills ARG0/ARG1/ARG2 are kept. Without, every
// non-auxiliary verb token in the character's sentences becomes an untyped
// event (see `fallback_verb_tokens`). Output is unordered; see order_events.
std::vector<EventInstance> extract_events(const Story& story,
                                          const CharacterRecord& character,
                                          const StoryAnnotations* annotations);

// Token indices of likely verb tokens in a sentence (heuristic used when no
// event annotations are available).
std::vector<std::size_t> fallback_verb_tokens(const Sentence& sentence);

// Sorts by sentence, then within each sentence topologically over the
// `before -> after` relations and the annotated ranks, breaking ties by
// offset. A cyclic sentence falls back to offset order with a warning.
std::vector<EventInstance> order_events(std::vector<EventInstance> events,
                                        std::span<const TemporalRelation> relations,
                                        Diagnostics& diag);

struct GenderedSequence {
  Gender gender = Gender::male;
  std::vector<std::string> items;
};

enum class Direction { before, after };
std::string_view to_string(Direction d);

struct NeighborTables {
  EventFrequencyTable male;
  EventFrequencyTable female;
  std::int64_t male_anchor_occurrences = 0;
  std::int64_t female_anchor_occurrences = 0;
};

// For each anchor occurrence in each sequence, counts up to `window` events
// immediately before (or after) it. Throws AnalysisError("anchor not found")
// when no sequence contains the anchor; ConfigError if window < 1.
NeighborTables neighbor_events(std::span<const GenderedSequence> sequences,
                               std::string_view anchor, Direction direction,
                               std::size_t window = 1);

}  // namespace talebias
