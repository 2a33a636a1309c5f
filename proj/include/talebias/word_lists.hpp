#pragma once

#include <optional>
#include <string_view>

#include "talebias/annotations.hpp"
#include "talebias/types.hpp"

// Bundled closed-class word lists. All lookups take lowercase words.
namespace talebias::words {

bool is_stopword(std::string_view w);
// Forms of be/have/do and the modals.
bool is_auxiliary(std::string_view w);
bool is_be_form(std::string_view w);
// Irregular inflected verb form -> base form ("wept" -> "weep").
std::optional<std::string_view> irregular_lemma(std::string_view w);
// Regular-looking -ed words that are not verb forms ("hundred", "naked").
bool is_non_verb_ed(std::string_view w);

// Honorifics and titles that can precede a name ("king", "mrs", ...).
bool is_title(std::string_view w);
// Gender a title implies, if any ("queen" -> female).
std::optional<Gender> title_gender(std::string_view w);

// he/him/his/himself -> male; she/her/hers/herself -> female.
PronounClass pronoun_class(std::string_view w);
bool is_subject_pronoun(std::string_view w);

}  // namespace talebias::words
