// CSV emission with full double precision and atomic replace on write.
#pragma once

#include <string>
#include <vector>

namespace weno {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Serializes with 17 significant digits, writes to <path>.tmp, then renames
// over <path> so readers never observe a partial file.
void write_csv(const std::string& path, const CsvTable& table);

// Strict reader for files produced by write_csv; throws std::runtime_error
// on missing file or malformed rows.
CsvTable read_csv(const std::string& path);

}  // namespace weno
