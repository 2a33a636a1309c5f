#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace talebias {

// Base for every error the library raises. The CLI maps subclasses onto
// exit codes: IoError/ConfigError -> 2, AnalysisError -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class AnalysisError : public Error {
 public:
  using Error::Error;
};

// Non-fatal messages collected while processing (cyclic temporal
// relations, skipped anchors, unreadable story files, ...).
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

}  // namespace talebias
