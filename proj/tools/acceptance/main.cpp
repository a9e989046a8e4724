// Acceptance driver: one PASS/FAIL line per criterion. Exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gon/cli/app.hpp"
#include "gon/cli/suites.hpp"

namespace {

using gon::cli::Report;
using gon::cli::SuiteConfig;

struct Criterion {
  int id;
  const char* name;
  const char* suite;
  std::optional<double> target_seconds;
};

std::string SummaryText(const Report& report) {
  std::string out;
  for (const auto& [key, value] : report.summary) out += " " + key + "=" + value;
  return out;
}

int FailedRows(const Report& report) {
  int failed = 0;
  for (const auto& row : report.rows) failed += row.back() != "ok";
  return failed;
}

std::string CliOutput(const std::vector<std::string>& args, int& status) {
  std::vector<const char*> argv = {"gon"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  status = gon::cli::RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

// Same seed under jobs 1, 4 and a second jobs 4 run, in both formats.
bool Deterministic(const std::string& suite, const std::vector<std::string>& extra, std::string& detail) {
  for (const char* format : {"csv", "json"}) {
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "4", "4"}) {
      std::vector<std::string> args = {"run-suite", suite, "--seed", "12345", "--jobs", jobs,
                                       "--format", format};
      args.insert(args.end(), extra.begin(), extra.end());
      int status = 0;
      outputs.push_back(CliOutput(args, status));
      if (status != 0) {
        detail += " " + suite + " exit " + std::to_string(status);
        return false;
      }
    }
    if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
      detail += " " + suite + " " + format + " differs";
      return false;
    }
    detail += " " + suite + ":" + format + ":" + std::to_string(outputs[0].size()) + "B";
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-square sweep", "twosquare", 30},
      {2, "gauss circle bounds", "gauss", 60},
      {3, "divisor problem", "divisor", 60},
      {4, "minkowski property suite", "minkowski", 120},
      {5, "second theorem", "second", std::nullopt},
      {6, "linear forms", "linear-forms", std::nullopt},
      {7, "packing constants", "packing", std::nullopt},
      {8, "pick and jarnik", "pick", std::nullopt},
      {9, "figurate", "figurate", 60},
      {10, "r-counting cross-checks", "counting", std::nullopt},
      {11, "hermite bound chain", "hermite", std::nullopt},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    SuiteConfig config;
    config.suite = c.suite;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      const Report report = gon::cli::RunSuite(config);
      pass = report.passed && !report.budget_hit;
      detail = "failed_rows=" +
               std::to_string(FailedRows(report)) + SummaryText(report);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[96];
    if (c.target_seconds) {
      std::snprintf(timing, sizeof timing, "%.1fs, target < %.0fs", seconds, *c.target_seconds);
      pass = pass && seconds < *c.target_seconds;
    } else {
      std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    }
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << timing << ") "
              << detail << std::endl;
    all = all && pass;
  }

  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  const bool deterministic =
      Deterministic("pick", {}, detail) && Deterministic("minkowski", {}, detail) &&
      Deterministic("linear-forms", {}, detail);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", seconds);
  std::cout << (deterministic ? "PASS " : "FAIL ") << "12 determinism (" << timing << ")" << detail
            << std::endl;
  all = all && deterministic;
  return all ? 0 : 1;
}
