#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "talebias/types.hpp"

namespace talebias {

// One character of one story: the per-character dataset row.
struct DatasetRow {
  std::string story_id;
  std::string title;
  std::string culture;
  std::string character_id;  // unique within the story
  std::string character;
  Gender gender = Gender::male;
  std::size_t appearances = 1;
  std::string sentences;
  MoralScore moral;
  // Score of the event lemmas alone; absent when the character has no events.
  std::optional<MoralScore> event_moral;
  std::vector<EventInstance> events;  // temporal order

  bool operator==(const DatasetRow&) const = default;
};

// CSV column names in file order.
const std::vector<std::string>& dataset_columns();

// "runs/dataset.csv" -> "runs/dataset.events.jsonl"
std::filesystem::path events_sibling_path(const std::filesystem::path& csv);

// Writes the CSV table and its line-delimited JSON sibling (event details,
// match counts, events-only scores). Output bytes depend only on `rows`.
void write_dataset(const std::vector<DatasetRow>& rows,
                   const std::filesystem::path& csv_path);

// Inverse of write_dataset. Throws IoError on malformed or mismatched files.
std::vector<DatasetRow> read_dataset(const std::filesystem::path& csv_path);

}  // namespace talebias
