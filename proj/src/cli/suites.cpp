#include "gon/cli/suites.hpp"

#include "cli/suite_util.hpp"
#include "gon/counting.hpp"

namespace gon::cli {

namespace detail {

std::int64_t SuiteContext::Param(const char* key, std::int64_t fallback) const {
  if (!config_.params.contains(key)) return fallback;
  const auto& value = config_.params.at(key);
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::kParse, std::string("parameter '") + key + "' must be an integer");
  }
  return value.get<std::int64_t>();
}

std::vector<Row> SuiteContext::Rows(std::size_t count, std::size_t width,
                                    const std::function<Row(std::size_t)>& fn) const {
  return ParallelRows(count, config_.jobs, [&](std::size_t i) {
    try {
      return fn(i);
    } catch (const Error& e) {
      Row row(width);
      row[0] = std::to_string(i);
      row[width - 1] =
          e.kind() == ErrorKind::kBudget ? std::string("budget") : "error:" + std::string(e.code());
      return row;
    }
  });
}

std::string Str(const Int& v) { return ToString(v); }
std::string Str(const Rat& v) { return ToString(v); }

void Finish(Report& report, bool summary_ok) {
  bool rows_ok = true;
  for (const Row& row : report.rows) {
    if (row.back() == "budget") report.budget_hit = true;
    if (row.back() != "ok") rows_ok = false;
  }
  report.Note("rows", std::to_string(report.rows.size()));
  report.passed = rows_ok && summary_ok;
}

const std::vector<std::string> kCircleColumns = {
    "x",        "exact",    "main_lo",       "main_hi",       "error_lo",
    "error_hi", "normalized_lo", "normalized_hi", "gauss_lower_hi", "gauss_upper_lo",
    "gauss"};

Row CircleRow(std::int64_t x) {
  const ErrorScanReport scan = CircleErrorScan({x});
  const ScanRow& s = scan.rows.front();
  Row row = {Str(x),     Str(s.exact),       Lo(s.main),       Hi(s.main),
             Lo(s.error), Hi(s.error),        Lo(s.normalized), Hi(s.normalized)};
  try {
    const GaussBoundsCheck g = GaussCircleBoundsCheck(Rat(x));
    row.push_back(Hi(g.lower));
    row.push_back(Lo(g.upper));
    row.push_back(g.lower_holds && g.upper_holds ? "ok" : "fail");
  } catch (const Error& e) {
    // Undecided comparisons are reported, not hidden.
    row.insert(row.end(), {"", "", "error:" + std::string(e.code())});
  }
  return row;
}

}  // namespace detail

const std::vector<SuiteInfo>& Suites() {
  static const std::vector<SuiteInfo> suites = {
      {"twosquare", "a^2 + b^2 = p for every prime p = 1 mod 4 below `limit`"},
      {"gauss", "certified Gauss circle bounds for x = 1..`xmax` and x = `extra`"},
      {"divisor", "hyperbola identity against naive sums, divisor error scan"},
      {"minkowski", "Minkowski and Mordell witnesses on random bodies, sub-threshold boxes"},
      {"second", "successive minima product bounds on random instances"},
      {"linear-forms", "real and complex linear forms solutions"},
      {"packing", "density, kissing number and Hermite invariant of standard lattices"},
      {"pick", "Pick identity and Jarnik bound on random convex lattice polygons"},
      {"figurate", "triangular and polygonal decompositions, Theon and odd-sum identities"},
      {"counting", "r_k cross-checks and the d = 3 ball volume ratio"},
      {"hermite", "first minimum against the Blichfeldt and Minkowski bounds"},
  };
  return suites;
}

SuiteConfig SuiteConfigFromJson(const nlohmann::json& doc) {
  auto fail = [](const std::string& message) -> void { throw Error(ErrorKind::kParse, message); };
  SuiteConfig config;
  if (!doc.is_object() || !doc.contains("suite") || !doc.at("suite").is_string()) {
    fail("config needs a string field 'suite'");
  }
  config.suite = doc.at("suite").get<std::string>();
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) fail("'seed' must be a non-negative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("jobs")) {
    if (!doc.at("jobs").is_number_integer() || doc.at("jobs").get<int>() < 1) fail("'jobs' must be >= 1");
    config.jobs = doc.at("jobs").get<int>();
  }
  if (doc.contains("budget")) {
    if (!doc.at("budget").is_number_unsigned() || doc.at("budget").get<std::uint64_t>() == 0) {
      fail("'budget' must be a positive integer");
    }
    config.budget = doc.at("budget").get<std::uint64_t>();
  }
  if (doc.contains("format")) {
    const std::string format = doc.at("format").is_string() ? doc.at("format").get<std::string>() : "";
    if (format != "csv" && format != "json") fail("'format' must be csv or json");
    config.format = format == "csv" ? Format::kCsv : Format::kJson;
  }
  if (doc.contains("out")) {
    if (!doc.at("out").is_string()) fail("'out' must be a path");
    config.out = doc.at("out").get<std::string>();
  }
  if (doc.contains("params")) {
    if (!doc.at("params").is_object()) fail("'params' must be an object");
    config.params = doc.at("params");
  }
  return config;
}

Report RunSuite(const SuiteConfig& config) {
  using detail::SuiteFn;
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"twosquare", detail::TwoSquareSuite},   {"gauss", detail::GaussSuite},
      {"divisor", detail::DivisorSuite},       {"minkowski", detail::MinkowskiSuite},
      {"second", detail::SecondTheoremSuite},  {"linear-forms", detail::LinearFormsSuite},
      {"packing", detail::PackingSuite},       {"pick", detail::PickSuite},
      {"figurate", detail::FigurateSuite},     {"counting", detail::CountingSuite},
      {"hermite", detail::HermiteSuite},
  };
  if (config.budget && *config.budget == 0) throw Error(ErrorKind::kParse, "budget must be positive");
  for (const auto& [name, fn] : table) {
    if (name != config.suite) continue;
    const detail::SuiteContext ctx(config);
    Report report = fn(ctx);
    report.name = name;
    report.seed = config.seed;
    return report;
  }
  throw Error(ErrorKind::kParse, "unknown suite '" + config.suite + "'");
}

}  // namespace gon::cli
