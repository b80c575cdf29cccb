#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef LADDERLAB_FIXTURES
#error "LADDERLAB_FIXTURES must point at tests/fixtures"
#endif

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(LADDERLAB_FIXTURES) / name;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::runtime_error("no column " + name);
  }
};

inline Csv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Csv csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      csv.header = cells;
      first = false;
    } else {
      csv.rows.push_back(cells);
    }
  }
  return csv;
}

struct Scalar {
  double value = 0.0;
  double abs_err = 0.0;
};

/// key,value,abs_err rows from the mpmath oracle.
inline std::map<std::string, Scalar> oracle_scalars() {
  const Csv csv = read_csv(fixture("oracle_scalars.csv"));
  std::map<std::string, Scalar> out;
  for (const auto& row : csv.rows) out[row[0]] = {std::stod(row[1]), std::stod(row[2])};
  return out;
}

struct Band {
  double observed = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Bands frozen from the calibration run: key,observed,lo,hi.
inline std::map<std::string, Band> calibration() {
  const Csv csv = read_csv(fixture("calibration.csv"));
  std::map<std::string, Band> out;
  for (const auto& row : csv.rows) {
    out[row[0]] = {std::stod(row[1]), std::stod(row[2]), std::stod(row[3])};
  }
  return out;
}

}  // namespace testing
