#include "talebias/word_lists.hpp"

#include <unordered_map>
#include <unordered_set>

namespace talebias::words {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet& stopwords() {
  // English function words, plus the modal verbs.
  static const WordSet set = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
      "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
      "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
      "be", "been", "being", "have", "has", "had", "having", "do", "does",
      "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because",
      "as", "until", "while", "of", "at", "by", "for", "with", "about",
      "against", "between", "into", "through", "during", "before", "after",
      "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
      "over", "under", "again", "further", "then", "once", "here", "there",
      "when", "where", "why", "how", "all", "any", "both", "each", "few",
      "more", "most", "other", "some", "such", "no", "nor", "not", "only",
      "own", "same", "so", "than", "too", "very", "s", "t", "can", "will",
      "just", "don", "don't", "should", "should've", "now", "d", "ll", "m",
      "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
      "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn",
      "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn",
      "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
      "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won't",
      "wouldn", "wouldn't", "'s", "\xE2\x80\x99s",
      // modals
      "would", "could", "shall", "may", "might", "must", "ought", "cannot",
      "wilt", "shalt", "canst", "wouldst", "couldst", "shouldst", "hast",
      "hath", "doth", "dost", "art", "thou", "thee", "thy", "thine", "ye",
      "nothing", "something", "anything", "everything", "oh", "o", "ah"};
  return set;
}

const WordSet& auxiliaries() {
  static const WordSet set = {
      "be", "am", "is", "are", "was", "were", "been", "being", "art", "wast",
      "wert", "have", "has", "had", "having", "hast", "hath", "hadst",
      "do", "does", "did", "doing", "done", "doth", "dost", "didst",
      "will", "would", "shall", "should", "may", "might", "can", "could",
      "must", "ought", "wilt", "shalt", "canst", "wouldst", "couldst",
      "shouldst", "cannot", "'ll", "'d"};
  return set;
}

const WordSet& be_forms() {
  static const WordSet set = {"be",  "am",   "is",   "are",  "was", "were",
                              "been", "being", "art", "wast", "wert"};
  return set;
}

const std::unordered_map<std::string_view, std::string_view>& irregulars() {
  static const std::unordered_map<std::string_view, std::string_view> map = {
      {"am", "be"}, {"is", "be"}, {"are", "be"}, {"was", "be"},
      {"were", "be"}, {"been", "be"}, {"being", "be"}, {"art", "be"},
      {"has", "have"}, {"had", "have"}, {"having", "have"}, {"hath", "have"},
      {"hast", "have"}, {"does", "do"}, {"did", "do"}, {"done", "do"},
      {"doth", "do"}, {"arose", "arise"}, {"arisen", "arise"},
      {"awoke", "awake"}, {"awoken", "awake"}, {"bade", "bid"},
      {"bore", "bear"}, {"borne", "bear"}, {"beat", "beat"},
      {"beaten", "beat"}, {"became", "become"}, {"befell", "befall"},
      {"befallen", "befall"}, {"began", "begin"}, {"begun", "begin"},
      {"beheld", "behold"}, {"bent", "bend"}, {"besought", "beseech"},
      {"bethought", "bethink"}, {"bit", "bite"}, {"bitten", "bite"},
      {"bled", "bleed"}, {"blew", "blow"}, {"blown", "blow"},
      {"broke", "break"}, {"broken", "break"}, {"bred", "breed"},
      {"brought", "bring"}, {"built", "build"}, {"burnt", "burn"},
      {"burst", "burst"}, {"bought", "buy"}, {"caught", "catch"},
      {"chose", "choose"}, {"chosen", "choose"}, {"clung", "cling"},
      {"came", "come"}, {"crept", "creep"}, {"dealt", "deal"},
      {"dug", "dig"}, {"dove", "dive"}, {"drew", "draw"}, {"drawn", "draw"},
      {"dreamt", "dream"}, {"drank", "drink"}, {"drunk", "drink"},
      {"drove", "drive"}, {"driven", "drive"}, {"dwelt", "dwell"},
      {"ate", "eat"}, {"eaten", "eat"}, {"fell", "fall"}, {"fallen", "fall"},
      {"fed", "feed"}, {"felt", "feel"}, {"fought", "fight"},
      {"found", "find"}, {"fled", "flee"}, {"flung", "fling"},
      {"flew", "fly"}, {"flown", "fly"}, {"forbade", "forbid"},
      {"forbidden", "forbid"}, {"foresaw", "foresee"},
      {"foreseen", "foresee"}, {"foretold", "foretell"},
      {"forgot", "forget"}, {"forgotten", "forget"}, {"forgave", "forgive"},
      {"forgiven", "forgive"}, {"forsook", "forsake"},
      {"forsaken", "forsake"}, {"froze", "freeze"}, {"frozen", "freeze"},
      {"got", "get"}, {"gotten", "get"}, {"gave", "give"},
      {"given", "give"}, {"went", "go"}, {"gone", "go"}, {"goes", "go"},
      {"ground", "grind"}, {"grew", "grow"}, {"grown", "grow"},
      {"hung", "hang"}, {"heard", "hear"}, {"hid", "hide"},
      {"hidden", "hide"}, {"held", "hold"}, {"kept", "keep"},
      {"knelt", "kneel"}, {"knew", "know"}, {"known", "know"},
      {"laid", "lay"}, {"lay", "lie"}, {"proven", "prove"}, {"strung", "string"}, {"stank", "stink"},
      {"stunk", "stink"}, {"shorn", "shear"}, {"chid", "chide"}, {"chidden", "chide"},
      {"hove", "heave"}, {"sawn", "saw"}, {"led", "lead"}, {"leapt", "leap"},
      {"blest", "bless"}, {"smelt", "smell"}, {"spelt", "spell"}, {"swollen", "swell"},
      {"staid", "stay"},
      {"learnt", "learn"}, {"left", "leave"}, {"lent", "lend"},
      {"lain", "lie"}, {"lit", "light"}, {"lost", "lose"},
      {"made", "make"}, {"meant", "mean"}, {"met", "meet"},
      {"mistook", "mistake"}, {"mistaken", "mistake"},
      {"overcame", "overcome"}, {"overtook", "overtake"},
      {"overtaken", "overtake"}, {"paid", "pay"}, {"rode", "ride"},
      {"ridden", "ride"}, {"rang", "ring"}, {"rung", "ring"},
      {"rose", "rise"}, {"risen", "rise"}, {"ran", "run"}, {"said", "say"},
      {"saith", "say"}, {"sat", "sit"}, {"saw", "see"}, {"seen", "see"},
      {"sought", "seek"}, {"sold", "sell"}, {"sent", "send"},
      {"sewn", "sew"}, {"shook", "shake"}, {"shaken", "shake"},
      {"shone", "shine"}, {"shot", "shoot"}, {"shown", "show"},
      {"shrank", "shrink"}, {"shrunk", "shrink"}, {"sang", "sing"},
      {"sung", "sing"}, {"sank", "sink"}, {"sunk", "sink"},
      {"slew", "slay"}, {"slain", "slay"}, {"slept", "sleep"},
      {"slid", "slide"}, {"slung", "sling"}, {"smote", "smite"},
      {"smitten", "smite"}, {"spoke", "speak"}, {"spoken", "speak"},
      {"sped", "speed"}, {"spent", "spend"}, {"spilt", "spill"},
      {"spun", "spin"}, {"spat", "spit"}, {"sprang", "spring"},
      {"sprung", "spring"}, {"stood", "stand"}, {"stole", "steal"},
      {"stolen", "steal"}, {"stuck", "stick"}, {"stung", "sting"},
      {"strode", "stride"}, {"struck", "strike"}, {"stricken", "strike"},
      {"strove", "strive"}, {"striven", "strive"}, {"swore", "swear"},
      {"sworn", "swear"}, {"swept", "sweep"}, {"swam", "swim"},
      {"swum", "swim"}, {"swung", "swing"}, {"took", "take"},
      {"taken", "take"}, {"taught", "teach"}, {"tore", "tear"},
      {"torn", "tear"}, {"told", "tell"}, {"thought", "think"},
      {"threw", "throw"}, {"thrown", "throw"}, {"trod", "tread"},
      {"trodden", "tread"}, {"understood", "understand"},
      {"undertook", "undertake"}, {"undid", "undo"}, {"undone", "undo"},
      {"upheld", "uphold"}, {"woke", "wake"}, {"woken", "wake"},
      {"wore", "wear"}, {"worn", "wear"}, {"wove", "weave"},
      {"woven", "weave"}, {"wed", "wed"}, {"wept", "weep"}, {"won", "win"},
      {"wound", "wind"}, {"withdrew", "withdraw"},
      {"withdrawn", "withdraw"}, {"withheld", "withhold"},
      {"withstood", "withstand"}, {"wrung", "wring"}, {"wrote", "write"},
      {"written", "write"}, {"agreed", "agree"}, {"freed", "free"},
      {"bathed", "bathe"}, {"bathing", "bathe"}, {"murmured", "murmur"},
      {"murmuring", "murmur"}, {"hanged", "hang"}, {"dying", "die"},
      {"lying", "lie"}, {"tying", "tie"}, {"eyed", "eye"}};
  return map;
}

const WordSet& non_verb_ed() {
  static const WordSet set = {
      "hundred", "sacred", "wicked", "naked", "kindred", "beloved", "crooked",
      "ragged", "rugged", "wretched", "jagged", "hatred", "indeed",
      "aged", "winged", "legged", "bed",
      "red", "shed", "sled", "wed", "embed", "seaweed", "steed", "reed"};
  return set;
}

const std::unordered_map<std::string_view, std::optional<Gender>>& titles() {
  static const std::unordered_map<std::string_view, std::optional<Gender>> map = {
      {"king", Gender::male},       {"queen", Gender::female},
      {"prince", Gender::male},     {"princess", Gender::female},
      {"mr", Gender::male},         {"mrs", Gender::female},
      {"ms", Gender::female},       {"miss", Gender::female},
      {"sir", Gender::male},        {"lady", Gender::female},
      {"lord", Gender::male},       {"dame", Gender::female},
      {"duke", Gender::male},       {"duchess", Gender::female},
      {"emperor", Gender::male},    {"empress", Gender::female},
      {"count", Gender::male},      {"countess", Gender::female},
      {"earl", Gender::male},       {"baron", Gender::male},
      {"baroness", Gender::female}, {"master", Gender::male},
      {"mistress", Gender::female}, {"father", Gender::male},
      {"mother", Gender::female},   {"brother", Gender::male},
      {"sister", Gender::female},   {"uncle", Gender::male},
      {"aunt", Gender::female},     {"madam", Gender::female},
      {"madame", Gender::female},   {"saint", std::nullopt},
      {"st", std::nullopt},         {"dr", std::nullopt},
      {"captain", std::nullopt},    {"professor", std::nullopt}};
  return map;
}

}  // namespace

bool is_stopword(std::string_view w) { return stopwords().contains(w); }

bool is_auxiliary(std::string_view w) { return auxiliaries().contains(w); }

bool is_be_form(std::string_view w) { return be_forms().contains(w); }

std::optional<std::string_view> irregular_lemma(std::string_view w) {
  const auto& map = irregulars();
  auto it = map.find(w);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

bool is_non_verb_ed(std::string_view w) { return non_verb_ed().contains(w); }

bool is_title(std::string_view w) { return titles().contains(w); }

std::optional<Gender> title_gender(std::string_view w) {
  const auto& map = titles();
  auto it = map.find(w);
  return it == map.end() ? std::nullopt : it->second;
}

PronounClass pronoun_class(std::string_view w) {
  if (w == "he" || w == "him" || w == "his" || w == "himself") {
    return PronounClass::male;
  }
  if (w == "she" || w == "her" || w == "hers" || w == "herself") {
    return PronounClass::female;
  }
  return PronounClass::none;
}

bool is_subject_pronoun(std::string_view w) {
  return w == "he" || w == "she" || w == "they" || w == "i" || w == "we" ||
         w == "you" || w == "it" || w == "thou" || w == "ye";
}

}  // namespace talebias::words
