#include "talebias/dataset.hpp"

#include <sstream>

#include "json.hpp"
#include "talebias/csv.hpp"
#include "talebias/errors.hpp"

namespace talebias {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kUndefined = "undefined";

std::string join_lemmas(const std::vector<EventInstance>& events) {
  std::string out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i) out += '|';
    out += events[i].lemma;
  }
  return out;
}

json roles_to_json(RoleSet roles) {
  json arr = json::array();
  if (roles.has(RoleSet::kArg0)) arr.push_back("ARG0");
  if (roles.has(RoleSet::kArg1)) arr.push_back("ARG1");
  if (roles.has(RoleSet::kArg2)) arr.push_back("ARG2");
  return arr;
}

RoleSet roles_from_json(const json& arr) {
  RoleSet roles;
  for (const auto& r : arr) {
    const auto s = r.get<std::string>();
    if (s == "ARG0") roles.add(RoleSet::kArg0);
    else if (s == "ARG1") roles.add(RoleSet::kArg1);
    else if (s == "ARG2") roles.add(RoleSet::kArg2);
    else throw IoError("dataset: unknown role " + s);
  }
  return roles;
}

json score_to_json(const MoralScore& s) {
  json j;
  j["probability"] = s.probability;
  j["sentiment"] = s.sentiment;
  j["ratio"] = s.moral_nonmoral_ratio ? json(*s.moral_nonmoral_ratio)
                                      : json(std::string(kUndefined));
  j["matched"] = s.matched;
  j["unmatched"] = s.unmatched;
  return j;
}

MoralScore score_from_json(const json& j) {
  MoralScore s;
  s.probability = j.at("probability").get<std::array<double, kFoundations>>();
  s.sentiment = j.at("sentiment").get<std::array<double, kFoundations>>();
  const json& r = j.at("ratio");
  if (r.is_string()) {
    s.moral_nonmoral_ratio.reset();
  } else {
    s.moral_nonmoral_ratio = r.get<double>();
  }
  s.matched = j.at("matched").get<std::size_t>();
  s.unmatched = j.at("unmatched").get<std::size_t>();
  return s;
}

json event_to_json(const EventInstance& e) {
  json j;
  j["id"] = e.id;
  j["trigger"] = e.trigger;
  j["lemma"] = e.lemma;
  j["type"] = e.event_type;
  j["sentence"] = e.sentence;
  j["offset"] = e.offset;
  j["rank"] = e.rank ? json(*e.rank) : json(nullptr);
  j["roles"] = roles_to_json(e.roles);
  return j;
}

EventInstance event_from_json(const json& j) {
  EventInstance e;
  e.id = j.at("id").get<std::string>();
  e.trigger = j.at("trigger").get<std::string>();
  e.lemma = j.at("lemma").get<std::string>();
  e.event_type = j.at("type").get<std::string>();
  e.sentence = j.at("sentence").get<std::size_t>();
  e.offset = j.at("offset").get<std::size_t>();
  if (!j.at("rank").is_null()) e.rank = j.at("rank").get<int>();
  e.roles = roles_from_json(j.at("roles"));
  return e;
}

double parse_cell(const std::string& cell, std::size_t row, std::string_view column) {
  const auto v = parse_number(cell);
  if (!v) {
    throw IoError("dataset: row " + std::to_string(row) + " column " +
                  std::string(column) + ": not a number: " + cell);
  }
  return *v;
}

}  // namespace

const std::vector<std::string>& dataset_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> c = {"title",       "culture",  "character",
                                  "gender",      "appearances", "sentences"};
    for (auto f : kFoundationNames) c.push_back(std::string(f) + "_p");
    for (auto f : kFoundationNames) c.push_back(std::string(f) + "_sent");
    c.push_back("moral_nonmoral_ratio");
    c.push_back("events");
    return c;
  }();
  return columns;
}

fs::path events_sibling_path(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".events.jsonl");
  return p;
}

void write_dataset(const std::vector<DatasetRow>& rows, const fs::path& csv_path) {
  std::ostringstream csv;
  std::ostringstream jsonl;
  write_csv_row(csv, dataset_columns());
  std::vector<std::string> fields;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const DatasetRow& r = rows[i];
    fields.clear();
    fields.push_back(r.title);
    fields.push_back(r.culture);
    fields.push_back(r.character);
    fields.push_back(std::string(to_string(r.gender)));
    fields.push_back(std::to_string(r.appearances));
    fields.push_back(r.sentences);
    for (double p : r.moral.probability) fields.push_back(format_number(p));
    for (double s : r.moral.sentiment) fields.push_back(format_number(s));
    fields.push_back(r.moral.moral_nonmoral_ratio
                         ? format_number(*r.moral.moral_nonmoral_ratio)
                         : std::string(kUndefined));
    fields.push_back(join_lemmas(r.events));
    write_csv_row(csv, fields);

    json j;
    j["row"] = i;
    j["story_id"] = r.story_id;
    j["character_id"] = r.character_id;
    j["character"] = r.character;
    j["moral"] = {{"matched", r.moral.matched}, {"unmatched", r.moral.unmatched}};
    j["event_moral"] = r.event_moral ? score_to_json(*r.event_moral) : json(nullptr);
    json events = json::array();
    for (const auto& e : r.events) events.push_back(event_to_json(e));
    j["events"] = std::move(events);
    jsonl << j.dump() << '\n';
  }
  write_file(csv_path, csv.str());
  write_file(events_sibling_path(csv_path), jsonl.str());
}

std::vector<DatasetRow> read_dataset(const fs::path& csv_path) {
  const auto records = parse_csv(read_file(csv_path));
  if (records.empty() || records.front() != dataset_columns()) {
    throw IoError("dataset: unexpected header in " + csv_path.string());
  }
  const auto& cols = dataset_columns();
  std::vector<DatasetRow> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const CsvRecord& rec = records[i];
    if (rec.size() != cols.size()) {
      throw IoError("dataset: row " + std::to_string(i) + " has " +
                    std::to_string(rec.size()) + " fields");
    }
    DatasetRow r;
    r.title = rec[0];
    r.culture = rec[1];
    r.character = rec[2];
    const auto g = parse_gender(rec[3]);
    if (!g) throw IoError("dataset: row " + std::to_string(i) + ": bad gender " + rec[3]);
    r.gender = *g;
    r.appearances = static_cast<std::size_t>(parse_cell(rec[4], i, cols[4]));
    r.sentences = rec[5];
    for (std::size_t f = 0; f < kFoundations; ++f) {
      r.moral.probability[f] = parse_cell(rec[6 + f], i, cols[6 + f]);
      r.moral.sentiment[f] = parse_cell(rec[11 + f], i, cols[11 + f]);
    }
    if (rec[16] == kUndefined) {
      r.moral.moral_nonmoral_ratio.reset();
    } else {
      r.moral.moral_nonmoral_ratio = parse_cell(rec[16], i, cols[16]);
    }
    rows.push_back(std::move(r));
  }

  const fs::path sibling = events_sibling_path(csv_path);
  const std::string text = read_file(sibling);
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (n >= rows.size()) {
      throw IoError("dataset: " + sibling.string() + " has more lines than rows");
    }
    try {
      const json j = json::parse(line);
      if (j.at("row").get<std::size_t>() != n) {
        throw IoError("dataset: " + sibling.string() + " out of order at line " +
                      std::to_string(n + 1));
      }
      DatasetRow& r = rows[n];
      if (j.at("character").get<std::string>() != r.character) {
        throw IoError("dataset: character mismatch at row " + std::to_string(n + 1));
      }
      r.story_id = j.at("story_id").get<std::string>();
      r.character_id = j.at("character_id").get<std::string>();
      r.moral.matched = j.at("moral").at("matched").get<std::size_t>();
      r.moral.unmatched = j.at("moral").at("unmatched").get<std::size_t>();
      if (!j.at("event_moral").is_null()) {
        r.event_moral = score_from_json(j.at("event_moral"));
      }
      for (const auto& e : j.at("events")) r.events.push_back(event_from_json(e));
    } catch (const json::exception& e) {
      throw IoError("dataset: " + sibling.string() + " line " +
                    std::to_string(n + 1) + ": " + e.what());
    }
    if (join_lemmas(rows[n].events) != records[n + 1][17]) {
      throw IoError("dataset: event list mismatch at row " + std::to_string(n + 1));
    }
    ++n;
  }
  if (n != rows.size()) {
    throw IoError("dataset: " + sibling.string() + " has " + std::to_string(n) +
                  " lines for " + std::to_string(rows.size()) + " rows");
  }
  return rows;
}

}  // namespace talebias
