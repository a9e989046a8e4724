#include "gon/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace gon::cli {

namespace {

constexpr long kEvalBits = 96;

std::string CsvCell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void WriteCsv(const Report& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << CsvCell(report.columns[i]);
  }
  out << '\n';
  for (const Row& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << CsvCell(row[i]);
    out << '\n';
  }
}

void WriteJson(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.name;
  doc["seed"] = report.seed;
  doc["passed"] = report.passed;
  doc["budget_hit"] = report.budget_hit;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.summary) summary[key] = value;
  doc["summary"] = summary;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& row : report.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      obj[report.columns[i]] = row[i];
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
}

void Write(const Report& report, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    WriteCsv(report, out);
  } else {
    WriteJson(report, out);
  }
}

std::string Lo(const RealEnclosure& e) { return DecimalFloor(e.lo(), kDecimalDigits); }
std::string Hi(const RealEnclosure& e) { return DecimalCeil(e.hi(), kDecimalDigits); }
std::string Lo(const Real& x) { return Lo(x.Eval(kEvalBits)); }
std::string Hi(const Real& x) { return Hi(x.Eval(kEvalBits)); }

std::vector<Row> ParallelRows(std::size_t count, int jobs,
                              const std::function<Row(std::size_t)>& fn) {
  std::vector<Row> rows(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        rows[i] = fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || count < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace gon::cli
