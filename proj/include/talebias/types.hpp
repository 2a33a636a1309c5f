#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace talebias {

enum class Gender { male, female };

std::string_view to_string(Gender g);
std::optional<Gender> parse_gender(std::string_view s);
inline Gender opposite(Gender g) {
  return g == Gender::male ? Gender::female : Gender::male;
}

inline constexpr std::size_t kFoundations = 5;
inline constexpr std::array<std::string_view, kFoundations> kFoundationNames = {
    "care", "fairness", "loyalty", "authority", "sanctity"};

struct MoralScore {
  std::array<double, kFoundations> probability{};
  std::array<double, kFoundations> sentiment{};
  // nullopt when every token matched the lexicon (ratio undefined).
  std::optional<double> moral_nonmoral_ratio = 0.0;
  std::size_t matched = 0;
  std::size_t unmatched = 0;

  bool no_moral_content() const { return matched == 0; }
  bool operator==(const MoralScore&) const = default;
};

// Semantic roles a character can hold for an event, as a bitmask.
struct RoleSet {
  static constexpr std::uint8_t kArg0 = 1;
  static constexpr std::uint8_t kArg1 = 2;
  static constexpr std::uint8_t kArg2 = 4;

  std::uint8_t bits = 0;

  bool empty() const { return bits == 0; }
  bool has(std::uint8_t role) const { return (bits & role) != 0; }
  void add(std::uint8_t role) { bits |= role; }
  bool operator==(const RoleSet&) const = default;
};

inline constexpr std::string_view kUntyped = "untyped";

struct EventInstance {
  std::string id;  // annotation event id; empty in fallback mode
  std::string trigger;
  std::string lemma;
  std::string event_type{kUntyped};
  std::size_t sentence = 0;
  std::size_t offset = 0;  // byte offset of the trigger in the story text
  std::optional<int> rank;  // within-sentence temporal rank, if annotated
  RoleSet roles;

  bool operator==(const EventInstance&) const = default;
};

enum class Scope { lemma, event_type };

// Item -> occurrence count. Keys are kept sorted so merges and iteration
// are deterministic.
struct EventFrequencyTable {
  Scope scope = Scope::lemma;
  std::map<std::string, std::int64_t, std::less<>> counts;
  std::int64_t total = 0;

  void add(std::string_view item, std::int64_t n = 1);
  void merge(const EventFrequencyTable& other);
  std::int64_t count(std::string_view item) const;
  bool contains(std::string_view item) const { return count(item) > 0; }
};

}  // namespace talebias
