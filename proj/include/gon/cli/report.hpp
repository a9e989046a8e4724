#pragma once

// Tabular experiment reports with CSV and JSON serialization. Every cell is a
// string already rendered exactly: integers, rationals "a/b", outward-rounded
// decimal interval endpoints, or verdict words.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gon/exact.hpp"

namespace gon::cli {

enum class Format { kCsv, kJson };

using Row = std::vector<std::string>;

struct Report {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  // Ordered key/value summary lines.
  std::vector<std::pair<std::string, std::string>> summary;
  bool passed = true;
  bool budget_hit = false;

  void Note(std::string key, std::string value) {
    summary.emplace_back(std::move(key), std::move(value));
  }
};

// CSV: header row then data rows, LF line endings; the summary is not part
// of the table. JSON: one object with name, seed, summary, rows, passed.
void WriteCsv(const Report& report, std::ostream& out);
void WriteJson(const Report& report, std::ostream& out);
void Write(const Report& report, Format format, std::ostream& out);

inline constexpr int kDecimalDigits = 12;

// Interval endpoints rounded outward to kDecimalDigits decimals.
std::string Lo(const RealEnclosure& e);
std::string Hi(const RealEnclosure& e);
std::string Lo(const Real& x);
std::string Hi(const Real& x);

// Evaluates fn(0..count-1) on `jobs` threads and returns the rows in index
// order. Exceptions inside fn propagate after every worker has finished.
std::vector<Row> ParallelRows(std::size_t count, int jobs,
                              const std::function<Row(std::size_t)>& fn);

}  // namespace gon::cli
