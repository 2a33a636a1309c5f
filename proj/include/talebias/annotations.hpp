#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "talebias/corpus.hpp"

namespace talebias {

enum class MentionKind { name, pronoun };
enum class PronounClass { male, female, none };

std::string_view to_string(MentionKind k);
std::string_view to_string(PronounClass p);

// A character mention. Token spans are half-open indices into the
// sentence's token list as produced by `segment`.
struct Mention {
  std::string character_id;
  std::size_t sentence = 0;
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  MentionKind kind = MentionKind::name;
  PronounClass pronoun = PronounClass::none;

  bool operator==(const Mention&) const = default;
};

struct AnnotatedCharacter {
  std::string character_id;
  std::string name;
  std::vector<Mention> mentions;
};

struct AnnotatedEvent {
  std::string event_id;
  std::size_t sentence = 0;
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  std::string trigger;
  std::string event_type;
  // ARG0, ARG1, ARG2 -> character id, or nullopt when no character fills it.
  std::array<std::optional<std::string>, 3> roles;
  std::optional<int> rank;
};

// `before` happens before `after`; both are event ids in the same sentence.
struct TemporalRelation {
  std::string before;
  std::string after;
};

struct StoryAnnotations {
  std::string story_id;
  std::vector<AnnotatedCharacter> characters;
  std::vector<AnnotatedEvent> events;
  std::vector<TemporalRelation> relations;
  std::optional<std::string> error;  // adapter failed on this story
};

struct AnnotationBundle {
  std::string header;  // raw JSON of the optional header line
  std::map<std::string, StoryAnnotations, std::less<>> stories;

  const StoryAnnotations* find(std::string_view story_id) const;
};

// Parses one line of the interchange file. Throws ConfigError on schema
// violations.
StoryAnnotations parse_story_annotations(std::string_view json_line);

// Reads a line-delimited bundle. An optional first line {"header": {...}}
// records the producing models.
AnnotationBundle load_annotation_bundle(const std::filesystem::path& path);

// Checks sentence and token indices against the core's segmentation of the
// same story; returns one message per violation.
std::vector<std::string> validate_annotations(const StoryAnnotations& ann,
                                              const Story& story);

// One JSON line per story with its segmented sentences and tokens: the
// input the annotation adapter consumes.
std::string export_segmentation(const std::vector<Story>& stories);

}  // namespace talebias
