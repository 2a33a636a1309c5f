#include "talebias/characters.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "talebias/word_lists.hpp"

namespace talebias {

namespace {

constexpr std::size_t kPronounWindow = 3;  // current sentence + two before

bool is_capitalized(std::string_view surface) {
  if (surface.empty()) return false;
  const auto b0 = static_cast<unsigned char>(surface[0]);
  if (b0 >= 'A' && b0 <= 'Z') return true;
  if (b0 == 0xC3 && surface.size() > 1) {
    const auto b1 = static_cast<unsigned char>(surface[1]);
    return b1 >= 0x80 && b1 <= 0x9E && b1 != 0x97;
  }
  return false;
}

bool is_name_token(const Token& t) {
  return is_capitalized(t.surface) && !words::is_stopword(t.lower) &&
         words::pronoun_class(t.lower) == PronounClass::none && t.lower != "i";
}

struct NameRun {
  std::size_t begin = 0;  // first token of the name (titles stripped)
  std::size_t end = 0;
  std::size_t run_begin = 0;  // first token of the capitalized run
  std::optional<Gender> title_gender;
};

std::vector<NameRun> name_runs(const Sentence& s) {
  std::vector<NameRun> runs;
  const auto& toks = s.tokens;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_name_token(toks[i])) {
      ++i;
      continue;
    }
    NameRun r;
    r.run_begin = i;
    std::size_t e = i;
    while (e < toks.size() && is_name_token(toks[e])) ++e;
    std::size_t b = i;
    while (b + 1 < e && words::is_title(toks[b].lower)) {
      if (auto g = words::title_gender(toks[b].lower)) r.title_gender = g;
      ++b;
    }
    if (b == i && i > 0 && words::is_title(toks[i - 1].lower)) {
      r.title_gender = words::title_gender(toks[i - 1].lower);
    }
    if (b + 1 == e && !r.title_gender) {
      r.title_gender = words::title_gender(toks[b].lower);
    }
    r.begin = b;
    r.end = e;
    runs.push_back(r);
    i = e;
  }
  return runs;
}

std::string join_surface(const Sentence& s, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t k = b; k < e; ++k) {
    if (k > b) out += ' ';
    out += s.tokens[k].surface;
  }
  return out;
}

bool seeds_character(const Sentence& s, const NameRun& r) {
  const bool title_before =
      r.begin > r.run_begin ||
      (r.run_begin > 0 && words::is_title(s.tokens[r.run_begin - 1].lower));
  return r.run_begin > 0 || title_before;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<DetectedCharacter> from_annotations(const StoryAnnotations& ann) {
  std::vector<DetectedCharacter> out;
  out.reserve(ann.characters.size());
  for (const auto& c : ann.characters) {
    out.push_back({c.character_id, c.name, c.mentions});
  }
  return out;
}

struct Evidence {
  int male = 0;
  int female = 0;
};

}  // namespace

std::vector<DetectedCharacter> detect_characters(const Story& story,
                                                 const StoryAnnotations* annotations) {
  if (annotations) return from_annotations(*annotations);

  std::vector<std::vector<NameRun>> runs;
  runs.reserve(story.sentences.size());
  std::set<std::string> seeds;
  for (const Sentence& s : story.sentences) {
    runs.push_back(name_runs(s));
    for (const NameRun& r : runs.back()) {
      if (seeds_character(s, r)) seeds.insert(join_surface(s, r.begin, r.end));
    }
  }
  if (seeds.empty()) return {};

  // Name mentions per sentence, keyed by first token.
  std::vector<DetectedCharacter> chars;
  std::map<std::string, std::size_t> by_name;
  std::vector<Evidence> evidence;
  std::vector<std::map<std::size_t, std::pair<std::size_t, Mention>>> name_at(
      story.sentences.size());

  for (const Sentence& s : story.sentences) {
    for (const NameRun& r : runs[s.index]) {
      std::size_t b = r.begin;
      std::string name = join_surface(s, b, r.end);
      if (!seeds.contains(name) && r.run_begin == 0 && r.end - r.run_begin >= 2) {
        b = r.run_begin + 1;
        name = join_surface(s, b, r.end);
      }
      if (!seeds.contains(name)) continue;
      auto [it, inserted] = by_name.emplace(name, chars.size());
      if (inserted) {
        chars.push_back({"c" + std::to_string(chars.size() + 1), name, {}});
        evidence.emplace_back();
      }
      const std::size_t ci = it->second;
      if (r.title_gender == Gender::male) ++evidence[ci].male;
      if (r.title_gender == Gender::female) ++evidence[ci].female;
      Mention m;
      m.character_id = chars[ci].character_id;
      m.sentence = s.index;
      m.token_begin = b;
      m.token_end = r.end;
      m.kind = MentionKind::name;
      name_at[s.index].emplace(b, std::make_pair(ci, m));
    }
  }

  // Walk the story in order; pronouns attach to the nearest compatible
  // preceding mention.
  std::vector<std::pair<std::size_t, std::size_t>> history;  // (char, sentence)
  for (const Sentence& s : story.sentences) {
    const auto& names = name_at[s.index];
    for (std::size_t k = 0; k < s.tokens.size(); ++k) {
      if (auto it = names.find(k); it != names.end()) {
        const auto& [ci, m] = it->second;
        chars[ci].mentions.push_back(m);
        history.emplace_back(ci, s.index);
        continue;
      }
      const PronounClass pc = words::pronoun_class(s.tokens[k].lower);
      if (pc == PronounClass::none) continue;
      std::set<std::size_t> rejected;
      for (auto h = history.rbegin(); h != history.rend(); ++h) {
        if (h->second + kPronounWindow <= s.index) break;
        const std::size_t ci = h->first;
        if (rejected.contains(ci)) continue;
        const Evidence& ev = evidence[ci];
        const bool contradicts = (pc == PronounClass::male && ev.female > ev.male) ||
                                 (pc == PronounClass::female && ev.male > ev.female);
        if (contradicts) {
          rejected.insert(ci);
          continue;
        }
        Mention m;
        m.character_id = chars[ci].character_id;
        m.sentence = s.index;
        m.token_begin = k;
        m.token_end = k + 1;
        m.kind = MentionKind::pronoun;
        m.pronoun = pc;
        chars[ci].mentions.push_back(m);
        if (pc == PronounClass::male) ++evidence[ci].male;
        else ++evidence[ci].female;
        history.emplace_back(ci, s.index);
        break;
      }
    }
  }
  return chars;
}

Gender assign_gender(std::span<const Mention> mentions, std::uint64_t seed,
                     std::string_view character_key) {
  std::size_t male = 0;
  std::size_t female = 0;
  for (const Mention& m : mentions) {
    if (m.kind != MentionKind::pronoun) continue;
    if (m.pronoun == PronounClass::male) ++male;
    if (m.pronoun == PronounClass::female) ++female;
  }
  if (male > female) return Gender::male;
  if (female > male) return Gender::female;
  const std::uint64_t coin = splitmix64(fnv1a64(character_key) ^ splitmix64(seed));
  return (coin >> 63) ? Gender::female : Gender::male;
}

std::vector<std::size_t> mention_sentences(std::span<const Mention> mentions) {
  std::vector<std::size_t> out;
  out.reserve(mentions.size());
  for (const Mention& m : mentions) out.push_back(m.sentence);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string group_sentences(const Story& story, std::span<const Mention> mentions) {
  std::string doc;
  for (const std::size_t idx : mention_sentences(mentions)) {
    if (idx >= story.sentences.size()) continue;
    if (!doc.empty()) doc += ' ';
    bool in_space = false;
    for (const char c : story.sentences[idx].text) {
      const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
      if (space) {
        in_space = true;
        continue;
      }
      if (in_space) doc += ' ';
      in_space = false;
      doc += c;
    }
  }
  return doc;
}

CharacterRecord make_character_record(const Story& story, DetectedCharacter detected,
                                      std::uint64_t seed) {
  CharacterRecord rec;
  rec.character_id = std::move(detected.character_id);
  rec.name = std::move(detected.name);
  rec.gender = assign_gender(detected.mentions, seed,
                             story.story_id + "#" + rec.character_id);
  rec.appearance_count = detected.mentions.size();
  rec.sentence_indices = mention_sentences(detected.mentions);
  rec.document = group_sentences(story, detected.mentions);
  rec.mentions = std::move(detected.mentions);
  return rec;
}

}  // namespace talebias
