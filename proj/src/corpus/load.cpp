#include <algorithm>
#include <map>

#include "json.hpp"
#include "talebias/corpus.hpp"
#include "talebias/csv.hpp"
#include "talebias/errors.hpp"

namespace talebias {

namespace fs = std::filesystem;

namespace {

struct StoryMeta {
  std::string title;
  std::string culture;
};

std::map<std::string, StoryMeta> load_metadata(const fs::path& path) {
  std::map<std::string, StoryMeta> meta;
  if (path.empty()) return meta;
  const std::string text = read_file(path);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("corpus: metadata " + path.string() + " line " +
                        std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("file") || !obj["file"].is_string()) {
      throw ConfigError("corpus: metadata " + path.string() + " line " +
                        std::to_string(line_no) + ": missing \"file\"");
    }
    StoryMeta m;
    if (auto it = obj.find("title"); it != obj.end() && it->is_string()) {
      m.title = it->get<std::string>();
    }
    if (auto it = obj.find("culture"); it != obj.end() && it->is_string()) {
      m.culture = it->get<std::string>();
    }
    meta[obj["file"].get<std::string>()] = std::move(m);
  }
  return meta;
}

}  // namespace

CorpusLoad load_corpus(const fs::path& root, const fs::path& metadata) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("corpus: not a directory: " + root.string());
  }
  const auto meta = load_metadata(metadata);

  std::vector<std::string> files;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file(ec) && it->path().extension() == ".txt") {
      files.push_back(fs::relative(it->path(), root).generic_string());
    }
  }
  if (ec) throw IoError("corpus: cannot list " + root.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw IoError("corpus: empty corpus: " + root.string());

  CorpusLoad out;
  for (const auto& [file, m] : meta) {
    if (!m.culture.empty() && m.culture != kUnknownCulture) {
      out.cultures.insert(m.culture);
    }
  }
  for (const std::string& file : files) {
    std::string text;
    try {
      text = read_file(root / file);
    } catch (const IoError& e) {
      out.errors.push_back(file + ": " + e.what());
      continue;
    }
    std::string title = fs::path(file).stem().string();
    std::string culture(kUnknownCulture);
    if (auto it = meta.find(file); it != meta.end()) {
      if (!it->second.title.empty()) title = it->second.title;
      if (!it->second.culture.empty()) culture = it->second.culture;
    }
    out.stories.push_back(
        make_story(file, std::move(title), std::move(culture), std::move(text)));
  }
  if (out.stories.empty()) {
    throw IoError("corpus: empty corpus (no readable story files): " +
                  root.string());
  }
  return out;
}

}  // namespace talebias
