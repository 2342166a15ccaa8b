#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace etchvm::csv {

struct Table {
  std::filesystem::path path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column position by header name, -1 when absent.
  int column_index(const std::string& name) const;
};

// Loads a comma-separated file. The formats used by this project never need
// quoting, so cells are split on every comma. Throws Error{missing_file}.
Table read_file(const std::filesystem::path& path);

std::vector<std::string> split_line(const std::string& line);

// Locale-independent numeric parsing/printing. format_double emits the
// shortest representation that round-trips exactly.
bool parse_double(const std::string& cell, double& out);
std::string format_double(double value);

// Fixed 5-decimal formatting used by report tables (negative zero collapses
// to zero so reruns are byte-stable).
std::string format_fixed5(double value);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace etchvm::csv
