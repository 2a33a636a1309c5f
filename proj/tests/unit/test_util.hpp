#pragma once

#include <atomic>
#include <filesystem>
#include <string>
#include <string_view>
#include <unistd.h>

#include "talebias/csv.hpp"

inline std::filesystem::path fixture(std::string_view rel) {
  return std::filesystem::path(TALEBIAS_FIXTURES) / rel;
}

inline std::filesystem::path data_file(std::string_view rel) {
  return std::filesystem::path(TALEBIAS_DATA) / rel;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("talebias_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// write_file that creates missing parent directories.
inline void put(const std::filesystem::path& p, std::string_view contents) {
  std::filesystem::create_directories(p.parent_path());
  talebias::write_file(p, contents);
}
