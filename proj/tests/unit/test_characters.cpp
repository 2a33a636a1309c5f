#include <algorithm>
#include <random>

#include "doctest.h"
#include "talebias/characters.hpp"
#include "talebias/corpus.hpp"

using namespace talebias;

namespace {

Story story(std::string text, std::string id = "t.txt") {
  return make_story(std::move(id), "T", "unknown", std::move(text));
}

Mention pronoun(PronounClass p) {
  Mention m;
  m.kind = MentionKind::pronoun;
  m.pronoun = p;
  return m;
}

Mention name_at(std::size_t sentence) {
  Mention m;
  m.sentence = sentence;
  m.token_begin = 0;
  m.token_end = 1;
  return m;
}

}  // namespace

TEST_CASE("fallback coref: The King rode. He slept.") {
  const Story s = story("The King rode. He slept.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].name == "King");
  CHECK(chars[0].character_id == "c1");
  REQUIRE(chars[0].mentions.size() == 2);
  CHECK(chars[0].mentions[0].kind == MentionKind::name);
  CHECK(chars[0].mentions[0].pronoun == PronounClass::none);
  CHECK(chars[0].mentions[1].kind == MentionKind::pronoun);
  CHECK(chars[0].mentions[1].pronoun == PronounClass::male);
  CHECK(chars[0].mentions[1].sentence == 1);
}

TEST_CASE("fallback coref: nothing capitalized mid-sentence") {
  CHECK(detect_characters(story("The wind blew. It was cold. Snow fell.")).empty());
}

TEST_CASE("fallback coref: titles seed and carry gender") {
  const Story s =
      story("Queen Mara rode out. King Olaf waited. He was angry and she smiled at him.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].name == "Mara");
  CHECK(chars[1].name == "Olaf");
  // "She" passes over Olaf (male evidence) to reach Mara; "him" goes back to
  // Olaf.
  auto pronouns = [](const DetectedCharacter& c) {
    std::vector<PronounClass> out;
    for (const auto& m : c.mentions) {
      if (m.kind == MentionKind::pronoun) out.push_back(m.pronoun);
    }
    return out;
  };
  CHECK(pronouns(chars[0]) == std::vector<PronounClass>{PronounClass::female});
  CHECK(pronouns(chars[1]) ==
        std::vector<PronounClass>{PronounClass::male, PronounClass::male});
}

TEST_CASE("fallback coref: pronoun window is the sentence and the two before it") {
  const Story s = story("Then Ivan left. It rained. It snowed. He returned.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].mentions.size() == 1);

  const Story near = story("Then Ivan left. It rained. He returned.");
  const auto c2 = detect_characters(near);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].mentions.size() == 2);
}

TEST_CASE("fallback coref: sentence-initial mention of a seeded name merges") {
  const Story s = story("One day Greta sang. Greta danced. Then she slept.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].mentions.size() == 3);
}

TEST_CASE("annotations bypass the fallback verbatim") {
  const Story s = story("The king came. A dog barked. The king left.");
  StoryAnnotations ann;
  ann.story_id = "t.txt";
  AnnotatedCharacter king;
  king.character_id = "king";
  king.name = "king";
  king.mentions = {name_at(0), name_at(2)};
  for (auto& m : king.mentions) m.character_id = "king";
  ann.characters.push_back(king);
  const auto chars = detect_characters(s, &ann);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].character_id == "king");
  CHECK(chars[0].mentions == king.mentions);
  CHECK(mention_sentences(chars[0].mentions) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("assign_gender: majority vote") {
  using P = PronounClass;
  const std::vector<Mention> he_his_she = {pronoun(P::male), pronoun(P::male),
                                           pronoun(P::female)};
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    CHECK(assign_gender(he_his_she, seed, "x#c1") == Gender::male);
  }
  const std::vector<Mention> she_her_her = {pronoun(P::female), pronoun(P::female),
                                            pronoun(P::female)};
  CHECK(assign_gender(she_her_her, 7, "x#c1") == Gender::female);
}

TEST_CASE("assign_gender: ties are a deterministic coin") {
  using P = PronounClass;
  const std::vector<Mention> tie = {pronoun(P::male), pronoun(P::female)};
  const Gender first = assign_gender(tie, 7, "story#c1");
  for (int i = 0; i < 5; ++i) CHECK(assign_gender(tie, 7, "story#c1") == first);
  // Frozen on first run: seed 7 with this key lands on female.
  CHECK(first == Gender::female);
  // Names alone do not count as pronouns.
  const std::vector<Mention> names = {name_at(0), name_at(1)};
  CHECK(assign_gender(names, 7, "story#c1") == first);
  // Both outcomes occur across keys, roughly evenly.
  int female = 0;
  for (int i = 0; i < 2000; ++i) {
    if (assign_gender(tie, 7, "s#c" + std::to_string(i)) == Gender::female) ++female;
  }
  CHECK(female > 900);
  CHECK(female < 1100);
}

TEST_CASE("assign_gender: permutation of mentions never matters") {
  using P = PronounClass;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mention> ms;
    const int n = static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) {
      const auto r = rng() % 3;
      ms.push_back(r == 0 ? pronoun(P::male) : r == 1 ? pronoun(P::female) : name_at(i));
    }
    const std::uint64_t seed = rng();
    const Gender g = assign_gender(ms, seed, "k#" + std::to_string(trial));
    std::shuffle(ms.begin(), ms.end(), rng);
    CHECK(assign_gender(ms, seed, "k#" + std::to_string(trial)) == g);
  }
}

TEST_CASE("group_sentences: owned sentences in order, single spaced") {
  const Story s = story("Ole ran.   Kari hid.\nOle  laughed.");
  std::vector<Mention> ms = {name_at(2), name_at(0)};
  CHECK(group_sentences(s, ms) == "Ole ran. Ole laughed.");
  CHECK(group_sentences(s, {}).empty());
}

TEST_CASE("group_sentences: a shared sentence appears in both documents") {
  const Story s = story("Then Hans met Greta. Hans left. Greta stayed.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 2);
  const std::string a = group_sentences(s, chars[0].mentions);
  const std::string b = group_sentences(s, chars[1].mentions);
  CHECK(a == "Then Hans met Greta. Hans left.");
  CHECK(b == "Then Hans met Greta. Greta stayed.");
}

TEST_CASE("character records: invariants on the fixture stories") {
  for (const char* text :
       {"Once there lived a poor woman called Greta. The neighbours loved Greta because "
        "she baked bread for them. She spun wool by the fire and she wept when winter "
        "came. One day the wicked Count Osric cheated her of her gold. He laughed and "
        "rode away.",
        "The King rode to the river. He prayed for rain. Then Queen Mara helped the poor. "
        "She saved a child and she loved the people. The King obeyed her counsel."}) {
    const Story s = story(text);
    for (auto& d : detect_characters(s)) {
      const std::size_t n = d.mentions.size();
      const CharacterRecord r = make_character_record(s, d, 3);
      CHECK(r.appearance_count == n);
      CHECK(std::is_sorted(r.sentence_indices.begin(), r.sentence_indices.end()));
      for (const auto& m : r.mentions) {
        CHECK(std::binary_search(r.sentence_indices.begin(), r.sentence_indices.end(),
                                 m.sentence));
        CHECK(m.token_end <= s.sentences[m.sentence].tokens.size());
        CHECK((m.kind == MentionKind::name) == (m.pronoun == PronounClass::none));
      }
      for (const std::size_t i : r.sentence_indices) {
        CHECK(std::any_of(r.mentions.begin(), r.mentions.end(),
                          [&](const Mention& m) { return m.sentence == i; }));
      }
    }
  }
}

TEST_CASE("fallback coref on the Greta story") {
  const Story s = story(
      "Once there lived a poor woman called Greta. The neighbours loved Greta because "
      "she baked bread for them. She spun wool by the fire and she wept when winter "
      "came. One day the wicked Count Osric cheated her of her gold. He laughed and "
      "rode away.");
  const auto chars = detect_characters(s);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].name == "Greta");
  CHECK(chars[1].name == "Osric");
  const auto greta = make_character_record(s, chars[0], 0);
  const auto osric = make_character_record(s, chars[1], 0);
  CHECK(greta.gender == Gender::female);
  CHECK(osric.gender == Gender::male);
  CHECK(greta.sentence_indices == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(osric.sentence_indices == std::vector<std::size_t>{3, 4});
}
