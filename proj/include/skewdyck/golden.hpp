#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "skewdyck/numeric.hpp"

namespace skewdyck {

/// Plain-text reference table. Lines starting with '#' are header/provenance
/// comments; every other non-blank line is "index v0 v1 ...", integers only.
struct GoldenRow {
  std::size_t index;
  std::vector<Integer> values;
};

struct GoldenTable {
  std::vector<std::string> header;
  std::vector<GoldenRow> rows;
};

/// Throws std::runtime_error when the file is missing or malformed.
GoldenTable load_golden(const std::filesystem::path& file);
GoldenTable parse_golden(const std::string& text);

}  // namespace skewdyck
