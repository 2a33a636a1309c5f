#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace talebias {

using CsvRecord = std::vector<std::string>;

// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF line endings.
// Blank lines are skipped. Throws IoError on an unterminated quote.
std::vector<CsvRecord> parse_csv(std::string_view text);

void write_csv_row(std::ostream& out, std::span<const std::string> fields);

// Shortest decimal string that parses back to the same double.
std::string format_number(double value);
// Strict parse of a whole field; nullopt on any trailing garbage.
std::optional<double> parse_number(std::string_view field);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace talebias
