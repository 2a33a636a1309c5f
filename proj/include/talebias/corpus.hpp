#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace talebias {

inline constexpr std::string_view kUnknownCulture = "unknown";

struct Token {
  std::string surface;
  std::string lower;
  std::size_t offset = 0;  // byte offset of `surface` in the source text

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::size_t begin = 0;  // byte offset of `text` in the source text
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Story {
  std::string story_id;
  std::string title;
  std::string culture{kUnknownCulture};
  std::string text;
  std::vector<Sentence> sentences;
};

// Word tokens of `text`. Offsets are relative to `text` plus `base_offset`.
// Words are runs of letters/digits (any non-ASCII letter counts); an
// apostrophe between letters stays inside the word, except that a trailing
// possessive "'s" is split off as its own token. Punctuation is dropped.
std::vector<Token> tokenize(std::string_view text, std::size_t base_offset = 0);

// Lowercases ASCII and Latin-1 letters; other bytes pass through.
std::string to_lower(std::string_view text);

// Rule-based sentence splitter: terminal punctuation (. ! ?, optionally
// followed by closing quotes/brackets) followed by whitespace, unless the
// period ends a known abbreviation or a single-letter initial, or the next
// word starts lowercase. Blank lines always end a sentence.
std::vector<Sentence> segment(std::string_view raw_text);

bool is_abbreviation(std::string_view lower_word);

Story make_story(std::string story_id, std::string title, std::string culture,
                 std::string text);

struct CorpusLoad {
  std::vector<Story> stories;        // sorted by story_id
  std::vector<std::string> errors;   // per-file failures; loading continued
  std::set<std::string> cultures;    // culture tags declared by metadata
};

// Loads every *.txt file under `root` (recursively). `metadata` is
// line-delimited JSON: {"file": ..., "title": ..., "culture": ...}, where
// "file" is the path relative to `root`. Throws IoError on an empty corpus
// and ConfigError on malformed metadata.
CorpusLoad load_corpus(const std::filesystem::path& root,
                       const std::filesystem::path& metadata);

}  // namespace talebias
