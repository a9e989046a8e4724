#pragma once

// Reproducible experiment suites. A suite is a pure function of its
// configuration: rows are computed independently (possibly concurrently)
// from per-row generators derived from (seed, row index) and assembled in
// index order, so the report bytes do not depend on `jobs`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gon/cli/report.hpp"
#include "json.hpp"

namespace gon::cli {

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 0;
  int jobs = 1;
  // Enumeration point cap and search node cap; library defaults when unset.
  std::optional<std::uint64_t> budget;
  // Suite-specific overrides such as {"instances": 20}.
  nlohmann::json params = nlohmann::json::object();
  Format format = Format::kCsv;
  std::string out;  // empty: standard output
};

// {"suite", "seed", "jobs", "budget", "format", "out", "params"}; only
// "suite" is required. Error(kParse) on malformed fields.
SuiteConfig SuiteConfigFromJson(const nlohmann::json& doc);

struct SuiteInfo {
  std::string name;
  std::string description;
};
const std::vector<SuiteInfo>& Suites();

// Error(kParse) for an unknown suite. Row verdicts are "ok", "fail",
// "budget" or "error:<code>"; `passed` is set when every row is "ok" and
// every summary check held, `budget_hit` when any row reports "budget".
Report RunSuite(const SuiteConfig& config);

}  // namespace gon::cli
