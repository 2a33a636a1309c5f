#include <algorithm>
#include <array>
#include <cctype>

#include "talebias/corpus.hpp"

namespace talebias {

namespace {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
};

CodePoint decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) |
                                    (c2 << 6) | c3),
              4};
    }
  }
  // Invalid sequence: treat the byte as an opaque symbol.
  return {0xFFFD, 1};
}

bool is_word_cp(char32_t c) {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  }
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  if (c < 0xC0 || c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;  // punctuation, symbols
  if (c >= 0x2E00 && c <= 0x2E7F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c == 0xFEFF || c == 0xFFFD) return false;
  return true;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

constexpr std::array<std::string_view, 23> kAbbreviations = {
    "capt", "ch",  "col", "dr",  "gen", "hon", "jr",  "lt",
    "messrs", "mlle", "mme", "mr", "mrs", "ms", "mt", "no",
    "prof", "rev", "sgt", "sr",  "st",  "vol", "vs"};

}  // namespace

bool is_abbreviation(std::string_view lower_word) {
  return std::binary_search(kAbbreviations.begin(), kAbbreviations.end(),
                            lower_word);
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto b = static_cast<unsigned char>(out[i]);
    if (b >= 'A' && b <= 'Z') {
      out[i] = static_cast<char>(b + 32);
    } else if (b == 0xC3 && i + 1 < out.size()) {
      const auto n = static_cast<unsigned char>(out[i + 1]);
      if (n >= 0x80 && n <= 0x9E && n != 0x97) {
        out[i + 1] = static_cast<char>(n + 0x20);
      }
      ++i;
    }
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text, std::size_t base_offset) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const CodePoint cp = decode(text, i);
    if (!is_word_cp(cp.value)) {
      i += cp.length;
      continue;
    }
    const std::size_t start = i;
    i += cp.length;
    // Start of the last in-word apostrophe; used to split off "'s".
    std::size_t last_apostrophe = std::string_view::npos;
    while (i < n) {
      const CodePoint next = decode(text, i);
      if (is_word_cp(next.value)) {
        i += next.length;
        continue;
      }
      if (is_apostrophe(next.value) && i + next.length < n &&
          is_word_cp(decode(text, i + next.length).value)) {
        last_apostrophe = i;
        i += next.length;
        continue;
      }
      break;
    }
    std::string_view word = text.substr(start, i - start);
    if (last_apostrophe != std::string_view::npos) {
      const std::size_t apos_len =
          decode(text, last_apostrophe).length;  // 1 or 3 bytes
      const std::string_view tail =
          text.substr(last_apostrophe + apos_len, i - last_apostrophe - apos_len);
      if (tail == "s" || tail == "S") {
        const std::string_view base = text.substr(start, last_apostrophe - start);
        tokens.push_back({std::string(base), to_lower(base), base_offset + start});
        const std::string_view poss =
            text.substr(last_apostrophe, i - last_apostrophe);
        tokens.push_back(
            {std::string(poss), to_lower(poss), base_offset + last_apostrophe});
        continue;
      }
    }
    tokens.push_back({std::string(word), to_lower(word), base_offset + start});
  }
  return tokens;
}

std::vector<Sentence> segment(std::string_view text) {
  std::vector<Sentence> out;
  const std::size_t n = text.size();

  auto emit = [&](std::size_t b, std::size_t e) {
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    if (b == e) return;
    Sentence s;
    s.index = out.size();
    s.begin = b;
    s.text = std::string(text.substr(b, e - b));
    s.tokens = tokenize(s.text, b);
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i;
      while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
      const std::size_t terminal_end = j;
      for (;;) {
        if (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' ||
                      text[j] == ']')) {
          ++j;
        } else if (text.substr(j, 3) == "”" ||
                   text.substr(j, 3) == "’") {
          j += 3;
        } else {
          break;
        }
      }
      if (j < n && !is_space(text[j])) {
        i = j;
        continue;
      }
      bool split = true;
      if (c == '.' && terminal_end - i == 1 && j == terminal_end) {
        std::size_t k = i;
        while (k > start && std::isalpha(static_cast<unsigned char>(text[k - 1]))) {
          --k;
        }
        const std::string word = to_lower(text.substr(k, i - k));
        const bool initial =
            word.size() == 1 && std::isupper(static_cast<unsigned char>(text[k]));
        if (!word.empty() && (is_abbreviation(word) || initial)) split = false;
      }
      if (split) {
        // A lowercase continuation ("Help!" cried the girl) keeps the
        // sentence open unless a blank line intervenes.
        std::size_t m = j;
        int newlines = 0;
        while (m < n && is_space(text[m])) {
          if (text[m] == '\n') ++newlines;
          ++m;
        }
        if (newlines < 2 && m < n && text[m] >= 'a' && text[m] <= 'z') {
          split = false;
        }
      }
      if (split) {
        emit(start, j);
        start = j;
      }
      i = j;
      continue;
    }
    if (c == '\n') {
      std::size_t k = i + 1;
      while (k < n && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) ++k;
      if (k < n && text[k] == '\n') {
        emit(start, i);
        start = k;
        i = k;
        continue;
      }
    }
    ++i;
  }
  emit(start, n);
  return out;
}

Story make_story(std::string story_id, std::string title, std::string culture,
                 std::string text) {
  Story s;
  s.story_id = std::move(story_id);
  s.title = std::move(title);
  s.culture = culture.empty() ? std::string(kUnknownCulture) : std::move(culture);
  s.text = std::move(text);
  s.sentences = segment(s.text);
  return s;
}

}  // namespace talebias
