#include "talebias/types.hpp"

namespace talebias {

std::string_view to_string(Gender g) {
  return g == Gender::male ? "male" : "female";
}

std::optional<Gender> parse_gender(std::string_view s) {
  if (s == "male") return Gender::male;
  if (s == "female") return Gender::female;
  return std::nullopt;
}

void EventFrequencyTable::add(std::string_view item, std::int64_t n) {
  if (n <= 0) return;
  auto it = counts.find(item);
  if (it == counts.end()) {
    counts.emplace(std::string(item), n);
  } else {
    it->second += n;
  }
  total += n;
}

void EventFrequencyTable::merge(const EventFrequencyTable& other) {
  for (const auto& [item, n] : other.counts) add(item, n);
}

std::int64_t EventFrequencyTable::count(std::string_view item) const {
  auto it = counts.find(item);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace talebias
