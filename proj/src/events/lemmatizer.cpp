#include <initializer_list>
#include <string>
#include <string_view>

#include "talebias/events.hpp"
#include "talebias/word_lists.hpp"

namespace talebias {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view s) {
  for (const char c : s) {
    if (is_vowel(c) || c == 'y') return true;
  }
  return false;
}

bool ends_with_any(std::string_view s, std::initializer_list<std::string_view> tails) {
  for (const auto t : tails) {
    if (s.ends_with(t)) return true;
  }
  return false;
}

std::size_t syllables(std::string_view s) {
  std::size_t n = 0;
  bool prev = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool v = is_vowel(s[i]) || (s[i] == 'y' && i > 0);
    if (v && !prev) ++n;
    prev = v;
  }
  return n;
}

bool is_cvc(std::string_view s) {
  if (s.size() < 3) return false;
  const char a = s[s.size() - 3], b = s[s.size() - 2], c = s[s.size() - 1];
  return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'y';
}

// Whole stems that take a final e.
constexpr std::string_view kNeedsE[] = {"invit", "unit", "excit", "recit", "ignit", "compet",
                                        "delet", "aton", "postpon", "condon", "consol",
                                        "interfer", "persever", "rever", "creat", "permeat",
                                        "ow", "aw", "cloth"};

// Stem endings that take a final e.
constexpr std::string_view kNeedsETails[] = {
    "com", "scap", "scop", "typ", "plet", "iat", "uat", "quir", "uid", "uad", "uag",
    "aug", "oug", "ced", "lg", "rul", "hal", "tast", "wast", "past", "plor", "stor", "gnor",
    "dor", "phon"};

// Stems that never take a final e.
constexpr std::string_view kNoE[] = {"pilot", "pivot", "ballot", "mortar", "nadir", "focus",
                                     "bias", "lens", "radius", "canvas", "caucus", "bus",
                                     "smooth", "pastor", "census", "chorus", "gas",
                                     "control", "patrol", "extol", "enrol"};

constexpr std::string_view kPrefixes[] = {"under", "over", "with", "fore", "out", "mis",
                                          "pre", "for", "re", "un", "up", "be"};

constexpr std::string_view kNgeStems[] = {"chang", "arrang", "rang", "veng", "lung", "plung",
                                          "cring", "lleng", "blig", "loung", "spong", "fring",
                                          "hing", "twing", "imping", "infring", "expung"};

constexpr std::string_view kCvcTails[] = {"at", "ut", "ot", "id", "ud", "od", "ad",
                                          "ir", "ur", "ar", "in", "ib", "ub", "um",
                                          "ag", "ig", "ok", "ak", "un", "il",
                                          "am", "an", "ol"};

bool needs_e(std::string_view s) {
  for (const auto w : kNoE) {
    if (s == w) return false;
  }
  for (const auto w : kNeedsE) {
    if (s == w) return true;
  }
  for (const auto t : kNeedsETails) {
    if (s.ends_with(t)) return true;
  }
  const char last = s.back();
  if (last == 'v' || last == 'c' || last == 'u') return true;
  if (s.size() >= 2) {
    const char prev = s[s.size() - 2];
    if (last == 's' && prev != 's') return true;
    if (last == 'z' && is_vowel(prev)) return true;
    if (last == 'l' && std::string_view{"bcdfgkpstz"}.find(prev) != std::string_view::npos) {
      return true;
    }
    if (last == 'r' && !is_vowel(prev) && prev != 'r' && prev != 'y') return true;
    if (last == 'z' && prev == 'y') return true;
    if (last == 'n' && prev == 'e' && s.size() >= 3 && s[s.size() - 3] == 'v' &&
        (s.size() < 4 || s[s.size() - 4] != 'e')) {
      return true;
    }
  }
  if (ends_with_any(s, {"dg", "rg"})) return true;
  for (const auto w : kNgeStems) {
    if (s == w || (s.ends_with(w) && w.size() >= 4)) return true;
  }
  if (ends_with_any(s, {"eath", "ooth", "oath", "eeth"})) return true;
  if (is_cvc(s)) {
    const char c = s.back();
    if (c == 'w' || c == 'x') return false;
    if (syllables(s) == 1) return true;
    for (const auto t : kCvcTails) {
      if (s.ends_with(t)) return true;
    }
  }
  return false;
}

bool undouble_ll(std::string_view s) {
  if (!s.ends_with("ll") || s.size() < 4) return false;
  const char v = s[s.size() - 3];
  const char c = s[s.size() - 4];
  const bool e_or_o = v == 'e' || v == 'o';
  const bool il = v == 'i' && (c == 'v' || c == 'c' || c == 'r');
  if (!e_or_o && !il) return false;
  if (s == "dispell") return true;
  if (ends_with_any(s, {"retell", "resell", "outsell", "ersell", "misspell", "foretell",
                        "nroll", "spell", "smell", "dwell", "swell"})) {
    return false;
  }
  return syllables(s) >= 2;
}

std::string restore(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 4 && stem[n - 1] == stem[n - 2] &&
      std::string_view{"bdgkmnprt"}.find(stem[n - 1]) != std::string_view::npos) {
    stem.pop_back();
    return stem;
  }
  if (stem.ends_with("ick") && syllables(stem) >= 2 &&
      std::string_view{"nfm"}.find(stem[n - 4]) != std::string_view::npos) {
    stem.pop_back();
    return stem;
  }
  if (undouble_ll(stem)) {
    stem.pop_back();
    return stem;
  }
  if (needs_e(stem)) stem += 'e';
  return stem;
}

}  // namespace

std::string lemmatize_verb(std::string_view w) {
  if (auto irr = words::irregular_lemma(w)) return std::string(*irr);
  for (const auto p : kPrefixes) {
    if (w.size() < p.size() + 3 || !w.starts_with(p)) continue;
    const auto rest = w.substr(p.size());
    if (auto irr = words::irregular_lemma(rest)) return std::string(p) + std::string(*irr);
  }
  if (w.size() <= 3) return std::string(w);

  if (w.ends_with("ies")) {
    if (w.size() <= 4) return std::string(w.substr(0, w.size() - 1));
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.ends_with("ied")) {
    if (w.size() <= 4) return std::string(w.substr(0, w.size() - 1));
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.ends_with("eed")) {
    if (w.size() <= 5 || w.ends_with("ceed")) return std::string(w);
    return std::string(w.substr(0, w.size() - 1));
  }

  if (w.ends_with("oed") && w.size() <= 5) return std::string(w.substr(0, w.size() - 1));
  if (w.ends_with("ed")) {
    const auto stem = w.substr(0, w.size() - 2);
    if (stem.size() >= 2 && has_vowel(stem)) return restore(std::string(stem));
    return std::string(w);
  }
  if (w.ends_with("ing")) {
    const auto stem = w.substr(0, w.size() - 3);
    if (stem.size() == 2 && stem[1] == 'y') return std::string(1, stem[0]) + "ie";
    if (stem.size() >= 2 && has_vowel(stem)) return restore(std::string(stem));
    return std::string(w);
  }
  if (w.ends_with("oes") && w.size() <= 5) return std::string(w.substr(0, w.size() - 1));
  if (w.ends_with("es") &&
      ends_with_any(w.substr(0, w.size() - 2), {"ch", "sh", "ss", "x", "zz", "o"})) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.ends_with("s") && !ends_with_any(w, {"ss", "us", "is"})) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

}  // namespace talebias
