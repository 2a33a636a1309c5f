#include "talebias/events.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "talebias/word_lists.hpp"

namespace talebias {

namespace {

bool is_adverb_like(std::string_view w) {
  return w.ends_with("ly") || w == "not" || w == "never" || w == "soon" ||
         w == "then" || w == "also";
}

bool looks_like_name(const Token& t, std::size_t position) {
  if (position == 0 || t.surface.empty()) return false;
  const char c = t.surface[0];
  return c >= 'A' && c <= 'Z' && !words::is_stopword(t.lower) &&
         words::pronoun_class(t.lower) == PronounClass::none;
}

bool is_verb_candidate(const Sentence& s, std::size_t k, bool after_subject) {
  const std::string& w = s.tokens[k].lower;
  if (words::is_auxiliary(w) || words::is_stopword(w)) return false;
  if (words::irregular_lemma(w)) return true;
  if (w.ends_with("ed") && !w.ends_with("eed") && w.size() >= 5 &&
      !words::is_non_verb_ed(w) && lemmatize_verb(w) != w) {
    return true;
  }
  if (w.ends_with("ing") && k > 0 && words::is_be_form(s.tokens[k - 1].lower)) {
    return true;
  }
  return after_subject && !w.ends_with("ly") && !w.ends_with("'s");
}

std::string first_word(std::string_view trigger) {
  std::size_t b = 0;
  while (b < trigger.size() && trigger[b] == ' ') ++b;
  std::size_t e = b;
  while (e < trigger.size() && trigger[e] != ' ') ++e;
  return std::string(trigger.substr(b, e - b));
}

std::vector<EventInstance> annotated_events(const Story& story,
                                            const CharacterRecord& character,
                                            const StoryAnnotations& ann) {
  std::vector<EventInstance> out;
  const std::set<std::size_t> owned(character.sentence_indices.begin(),
                                    character.sentence_indices.end());
  for (const AnnotatedEvent& ev : ann.events) {
    if (!owned.contains(ev.sentence)) continue;
    RoleSet roles;
    for (std::size_t r = 0; r < ev.roles.size(); ++r) {
      if (ev.roles[r] && *ev.roles[r] == character.character_id) {
        roles.add(static_cast<std::uint8_t>(1u << r));
      }
    }
    if (roles.empty()) continue;
    std::string trigger = ev.trigger;
    const Sentence* sent =
        ev.sentence < story.sentences.size() ? &story.sentences[ev.sentence] : nullptr;
    if (trigger.empty() && sent) {
      for (std::size_t k = ev.token_begin; k < ev.token_end && k < sent->tokens.size(); ++k) {
        if (!trigger.empty()) trigger += ' ';
        trigger += sent->tokens[k].surface;
      }
    }
    auto lemma = normalize_event(trigger);
    if (!lemma) continue;
    EventInstance inst;
    inst.id = ev.event_id;
    inst.trigger = std::move(trigger);
    inst.lemma = std::move(*lemma);
    inst.event_type = ev.event_type.empty() ? std::string(kUntyped) : ev.event_type;
    inst.sentence = ev.sentence;
    if (sent && ev.token_begin < sent->tokens.size()) {
      inst.offset = sent->tokens[ev.token_begin].offset;
    }
    inst.rank = ev.rank;
    inst.roles = roles;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<EventInstance> fallback_events(const Story& story,
                                           const CharacterRecord& character) {
  std::vector<EventInstance> out;
  std::map<std::size_t, std::vector<std::size_t>> mention_tokens;
  for (const Mention& m : character.mentions) {
    mention_tokens[m.sentence].push_back(m.token_begin);
  }
  for (const std::size_t si : character.sentence_indices) {
    if (si >= story.sentences.size()) continue;
    const Sentence& s = story.sentences[si];
    const auto& starts = mention_tokens[si];
    const std::size_t first_mention =
        starts.empty() ? s.tokens.size() : *std::min_element(starts.begin(), starts.end());
    for (const std::size_t k : fallback_verb_tokens(s)) {
      auto lemma = normalize_event(s.tokens[k].lower);
      if (!lemma) continue;
      EventInstance inst;
      inst.trigger = s.tokens[k].surface;
      inst.lemma = std::move(*lemma);
      inst.sentence = si;
      inst.offset = s.tokens[k].offset;
      inst.roles.add(first_mention < k ? RoleSet::kArg0 : RoleSet::kArg1);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

using OrderKey = std::tuple<std::size_t, std::string, std::string, std::size_t>;

OrderKey order_key(const EventInstance& e, std::size_t i) {
  return {e.offset, e.id, e.lemma, i};
}

// Topological order of one sentence's events; empty on a cycle.
std::vector<std::size_t> topo_sentence(const std::vector<EventInstance>& evs,
                                       const std::vector<std::size_t>& members,
                                       std::span<const TemporalRelation> relations) {
  const std::size_t n = members.size();
  std::map<std::string, std::size_t, std::less<>> by_id;
  for (std::size_t i = 0; i < n; ++i) {
    if (!evs[members[i]].id.empty()) by_id.emplace(evs[members[i]].id, i);
  }
  std::vector<std::set<std::size_t>> succ(n);
  for (const TemporalRelation& r : relations) {
    auto a = by_id.find(r.before);
    auto b = by_id.find(r.after);
    if (a == by_id.end() || b == by_id.end()) continue;
    succ[a->second].insert(b->second);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ri = evs[members[i]].rank;
      const auto& rj = evs[members[j]].rank;
      if (ri && rj && *ri < *rj) succ[i].insert(j);
    }
  }
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& s : succ) {
    for (const std::size_t j : s) ++indegree[j];
  }
  using Item = std::pair<OrderKey, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.emplace(order_key(evs[members[i]], 0), i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = ready.top().second;
    ready.pop();
    order.push_back(members[i]);
    for (const std::size_t j : succ[i]) {
      if (--indegree[j] == 0) ready.emplace(order_key(evs[members[j]], 0), j);
    }
  }
  if (order.size() != n) order.clear();
  return order;
}

}  // namespace

std::optional<std::string> normalize_event(std::string_view trigger) {
  const std::string word = to_lower(first_word(trigger));
  if (word.empty()) return std::nullopt;
  if (words::is_auxiliary(word) || words::is_stopword(word)) return std::nullopt;
  std::string lemma = lemmatize_verb(word);
  if (lemma.empty() || words::is_auxiliary(lemma) || words::is_stopword(lemma)) {
    return std::nullopt;
  }
  return lemma;
}

std::vector<std::size_t> fallback_verb_tokens(const Sentence& sentence) {
  std::vector<std::size_t> out;
  bool after_subject = false;
  for (std::size_t k = 0; k < sentence.tokens.size(); ++k) {
    const Token& t = sentence.tokens[k];
    if (words::is_subject_pronoun(t.lower) || looks_like_name(t, k)) {
      after_subject = true;
      continue;
    }
    if (after_subject && is_adverb_like(t.lower)) continue;
    if (is_verb_candidate(sentence, k, after_subject)) out.push_back(k);
    after_subject = false;
  }
  return out;
}

std::vector<EventInstance> extract_events(const Story& story,
                                          const CharacterRecord& character,
                                          const StoryAnnotations* annotations) {
  if (annotations) return annotated_events(story, character, *annotations);
  return fallback_events(story, character);
}

std::vector<EventInstance> order_events(std::vector<EventInstance> events,
                                        std::span<const TemporalRelation> relations,
                                        Diagnostics& diag) {
  std::map<std::size_t, std::vector<std::size_t>> by_sentence;
  for (std::size_t i = 0; i < events.size(); ++i) {
    by_sentence[events[i].sentence].push_back(i);
  }
  std::vector<EventInstance> out;
  out.reserve(events.size());
  for (auto& [sentence, members] : by_sentence) {
    std::vector<std::size_t> order = topo_sentence(events, members, relations);
    if (order.empty()) {
      diag.warn("events: cyclic temporal relations in sentence " +
                std::to_string(sentence) + "; using text order");
      order = members;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return order_key(events[a], 0) < order_key(events[b], 0);
      });
    }
    for (const std::size_t i : order) out.push_back(std::move(events[i]));
  }
  return out;
}

std::string_view to_string(Direction d) {
  return d == Direction::before ? "before" : "after";
}

NeighborTables neighbor_events(std::span<const GenderedSequence> sequences,
                               std::string_view anchor, Direction direction,
                               std::size_t window) {
  if (window < 1) throw ConfigError("events: window must be at least 1");
  NeighborTables t;
  for (const GenderedSequence& seq : sequences) {
    const bool male = seq.gender == Gender::male;
    EventFrequencyTable& table = male ? t.male : t.female;
    std::int64_t& occurrences =
        male ? t.male_anchor_occurrences : t.female_anchor_occurrences;
    const auto& items = seq.items;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i] != anchor) continue;
      ++occurrences;
      if (direction == Direction::before) {
        const std::size_t from = i >= window ? i - window : 0;
        for (std::size_t j = from; j < i; ++j) table.add(items[j]);
      } else {
        const std::size_t to = std::min(items.size(), i + 1 + window);
        for (std::size_t j = i + 1; j < to; ++j) table.add(items[j]);
      }
    }
  }
  if (t.male_anchor_occurrences == 0 && t.female_anchor_occurrences == 0) {
    throw AnalysisError("events: anchor not found: " + std::string(anchor));
  }
  return t;
}

}  // namespace talebias
