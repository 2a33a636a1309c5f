#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talebias/annotations.hpp"
#include "talebias/corpus.hpp"
#include "talebias/types.hpp"

namespace talebias {

struct DetectedCharacter {
  std::string character_id;  // unique within the story
  std::string name;
  std::vector<Mention> mentions;  // in story order
};

struct CharacterRecord {
  std::string character_id;
  std::string name;
  Gender gender = Gender::male;
  std::size_t appearance_count = 0;
  std::vector<std::size_t> sentence_indices;  // ascending, unique
  std::string document;
  std::vector<Mention> mentions;
  std::vector<EventInstance> events;  // filled by the events stage
};

// Characters and their mentions. With annotations the mentions are taken
// verbatim. Otherwise a rule-based fallback seeds characters from
// capitalized non-initial tokens (or tokens after a title such as "King"),
// merges exact-string mentions, and resolves each he/him/his/she/her to the
// nearest preceding compatible character within a three-sentence window.
std::vector<DetectedCharacter> detect_characters(
    const Story& story, const StoryAnnotations* annotations = nullptr);

// Majority vote of he/him/his/himself against she/her/hers/herself.
// Ties (including no pronouns) are settled by a coin flip that depends only
// on (seed, character_key).
Gender assign_gender(std::span<const Mention> mentions, std::uint64_t seed,
                     std::string_view character_key);

// Ascending unique sentence indices hosting at least one mention.
std::vector<std::size_t> mention_sentences(std::span<const Mention> mentions);

// Sentences owning a mention, in story order, single-space joined (internal
// whitespace runs collapse to one space).
std::string group_sentences(const Story& story, std::span<const Mention> mentions);

// Gender, sentence grouping and appearance count for one detected
// character. The tie-break key is "<story_id>#<character_id>".
CharacterRecord make_character_record(const Story& story,
                                      DetectedCharacter detected,
                                      std::uint64_t seed);

}  // namespace talebias
