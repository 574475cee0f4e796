#include "weno/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weno {

void write_csv(const std::string& path, const CsvTable& table) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
    for (std::size_t c = 0; c < table.header.size(); ++c)
      os << (c ? "," : "") << table.header[c];
    os << "\n";
    char buf[32];
    for (const auto& row : table.rows) {
      if (row.size() != table.header.size())
        throw std::runtime_error("row width does not match header in " + path);
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
        os << (c ? "," : "") << buf;
      }
      os << "\n";
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("empty CSV file " + path);
  std::istringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::vector<double> row;
    while (std::getline(rs, cell, ',')) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw std::runtime_error("malformed number '" + cell + "' in " + path);
      }
      if (used != cell.size())
        throw std::runtime_error("malformed number '" + cell + "' in " + path);
      row.push_back(v);
    }
    if (row.size() != table.header.size())
      throw std::runtime_error("row width does not match header in " + path);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace weno
