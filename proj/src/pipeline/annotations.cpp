#include "talebias/annotations.hpp"

#include <set>

#include "json.hpp"
#include "talebias/csv.hpp"
#include "talebias/errors.hpp"
#include "talebias/types.hpp"

namespace talebias {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 3> kRoleNames = {"ARG0", "ARG1", "ARG2"};

std::pair<std::size_t, std::size_t> parse_span(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(std::string("annotations: ") + what + " must be [begin, end]");
  }
  const auto b = j[0].get<std::size_t>();
  const auto e = j[1].get<std::size_t>();
  if (b >= e) {
    throw ConfigError(std::string("annotations: empty or reversed ") + what);
  }
  return {b, e};
}

Mention parse_mention(const json& j, const std::string& character_id) {
  Mention m;
  m.character_id = character_id;
  m.sentence = j.at("sentence").get<std::size_t>();
  std::tie(m.token_begin, m.token_end) = parse_span(j.at("span"), "mention span");
  const auto kind = j.at("kind").get<std::string>();
  const auto cls = j.value("pronoun_class", std::string("none"));
  if (kind == "name") {
    m.kind = MentionKind::name;
    if (cls != "none") {
      throw ConfigError("annotations: name mention of " + character_id +
                        " carries pronoun class " + cls);
    }
  } else if (kind == "pronoun") {
    m.kind = MentionKind::pronoun;
    if (cls == "male") m.pronoun = PronounClass::male;
    else if (cls == "female") m.pronoun = PronounClass::female;
    else throw ConfigError("annotations: pronoun mention of " + character_id +
                           " needs pronoun_class male|female");
  } else {
    throw ConfigError("annotations: unknown mention kind " + kind);
  }
  return m;
}

}  // namespace

std::string_view to_string(MentionKind k) {
  return k == MentionKind::name ? "name" : "pronoun";
}

std::string_view to_string(PronounClass p) {
  switch (p) {
    case PronounClass::male: return "male";
    case PronounClass::female: return "female";
    case PronounClass::none: break;
  }
  return "none";
}

const StoryAnnotations* AnnotationBundle::find(std::string_view story_id) const {
  auto it = stories.find(story_id);
  return it == stories.end() ? nullptr : &it->second;
}

StoryAnnotations parse_story_annotations(std::string_view json_line) {
  StoryAnnotations out;
  try {
    const json j = json::parse(json_line);
    out.story_id = j.at("story_id").get<std::string>();
    if (auto it = j.find("error"); it != j.end() && !it->is_null()) {
      out.error = it->get<std::string>();
    }
    for (const auto& c : j.value("characters", json::array())) {
      AnnotatedCharacter ch;
      ch.character_id = c.at("character_id").get<std::string>();
      ch.name = c.at("name").get<std::string>();
      for (const auto& m : c.at("mentions")) {
        ch.mentions.push_back(parse_mention(m, ch.character_id));
      }
      out.characters.push_back(std::move(ch));
    }
    for (const auto& e : j.value("events", json::array())) {
      AnnotatedEvent ev;
      ev.event_id = e.at("event_id").get<std::string>();
      ev.sentence = e.at("sentence").get<std::size_t>();
      std::tie(ev.token_begin, ev.token_end) =
          parse_span(e.at("trigger_span"), "trigger span");
      ev.trigger = e.at("trigger").get<std::string>();
      ev.event_type = e.value("event_type", std::string(kUntyped));
      if (ev.event_type.empty()) ev.event_type = kUntyped;
      const json& roles = e.at("roles");
      for (std::size_t r = 0; r < kRoleNames.size(); ++r) {
        auto it = roles.find(std::string(kRoleNames[r]));
        if (it != roles.end() && !it->is_null()) {
          ev.roles[r] = it->get<std::string>();
        }
      }
      if (auto it = e.find("rank"); it != e.end() && !it->is_null()) {
        ev.rank = it->get<int>();
      }
      out.events.push_back(std::move(ev));
    }
    for (const auto& r : j.value("relations", json::array())) {
      out.relations.push_back(
          {r.at("before").get<std::string>(), r.at("after").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("annotations: ") + e.what());
  }
  return out;
}

AnnotationBundle load_annotation_bundle(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  AnnotationBundle bundle;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      if (line_no == 1) {
        const json j = json::parse(line);
        if (j.is_object() && j.contains("header")) {
          bundle.header = j["header"].dump();
          continue;
        }
      }
      StoryAnnotations story = parse_story_annotations(line);
      const std::string id = story.story_id;
      if (!bundle.stories.emplace(id, std::move(story)).second) {
        throw ConfigError("annotations: duplicate story " + id);
      }
    } catch (const json::exception& e) {
      throw ConfigError("annotations: " + path.string() + " line " +
                        std::to_string(line_no) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + " line " + std::to_string(line_no) +
                        ": " + e.what());
    }
  }
  return bundle;
}

std::vector<std::string> validate_annotations(const StoryAnnotations& ann,
                                              const Story& story) {
  std::vector<std::string> problems;
  auto check_span = [&](std::size_t sentence, std::size_t b, std::size_t e,
                        const std::string& what) {
    if (sentence >= story.sentences.size()) {
      problems.push_back(what + ": sentence " + std::to_string(sentence) +
                         " out of range");
      return;
    }
    if (e > story.sentences[sentence].tokens.size()) {
      problems.push_back(what + ": token span [" + std::to_string(b) + ", " +
                         std::to_string(e) + ") exceeds sentence " +
                         std::to_string(sentence));
    }
  };
  std::set<std::string> ids;
  for (const auto& c : ann.characters) {
    if (!ids.insert(c.character_id).second) {
      problems.push_back("duplicate character id " + c.character_id);
    }
    for (const auto& m : c.mentions) {
      check_span(m.sentence, m.token_begin, m.token_end,
                 "mention of " + c.character_id);
    }
  }
  std::set<std::string> event_ids;
  for (const auto& e : ann.events) {
    if (!event_ids.insert(e.event_id).second) {
      problems.push_back("duplicate event id " + e.event_id);
    }
    check_span(e.sentence, e.token_begin, e.token_end, "event " + e.event_id);
    for (const auto& r : e.roles) {
      if (r && !ids.contains(*r)) {
        problems.push_back("event " + e.event_id + " names unknown character " + *r);
      }
    }
  }
  for (const auto& r : ann.relations) {
    if (!event_ids.contains(r.before) || !event_ids.contains(r.after)) {
      problems.push_back("relation " + r.before + " -> " + r.after +
                         " names an unknown event");
    }
  }
  return problems;
}

std::string export_segmentation(const std::vector<Story>& stories) {
  std::string out;
  for (const Story& s : stories) {
    json j;
    j["story_id"] = s.story_id;
    j["title"] = s.title;
    j["culture"] = s.culture;
    json sentences = json::array();
    for (const Sentence& sent : s.sentences) {
      json tokens = json::array();
      for (const Token& t : sent.tokens) tokens.push_back(t.surface);
      sentences.push_back({{"index", sent.index}, {"text", sent.text},
                           {"tokens", std::move(tokens)}});
    }
    j["sentences"] = std::move(sentences);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace talebias
