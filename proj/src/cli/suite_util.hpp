#pragma once

// Shared plumbing for the suite implementations.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gon/cli/report.hpp"
#include "gon/cli/suites.hpp"
#include "gon/error.hpp"
#include "gon/lattice.hpp"

namespace gon::cli::detail {

// SplitMix64 stream; every draw is a fixed function of (seed, stream, step)
// so results do not depend on the standard library's distributions.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(Mix(seed) ^ Mix(stream + 0x9E3779B97F4A7C15ULL)) {}

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return Mix(state_);
  }
  // Uniform on [lo, hi] by rejection.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw = Next();
    while (draw >= limit) draw = Next();
    return lo + static_cast<std::int64_t>(draw % range);
  }

 private:
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

class SuiteContext {
 public:
  explicit SuiteContext(const SuiteConfig& config) : config_(config) {
    if (config.budget) options_.max_points = *config.budget;
  }

  std::uint64_t seed() const { return config_.seed; }
  int jobs() const { return config_.jobs; }
  const std::optional<std::uint64_t>& budget() const { return config_.budget; }
  const EnumerateOptions& options() const { return options_; }
  Rng RowRng(std::size_t row) const { return Rng(config_.seed, row); }
  // Integer parameter override; Error(kParse) on a non-integer value.
  std::int64_t Param(const char* key, std::int64_t fallback) const;

  // Evaluates rows in parallel. Each row's last cell is its verdict; a
  // budget error becomes "budget" and any other library error
  // "error:<code>", with the remaining cells left empty.
  std::vector<Row> Rows(std::size_t count, std::size_t width,
                        const std::function<Row(std::size_t)>& fn) const;

 private:
  const SuiteConfig& config_;
  EnumerateOptions options_;
};

inline std::string Verdict(bool ok) { return ok ? "ok" : "fail"; }
inline std::string Str(std::int64_t v) { return std::to_string(v); }
std::string Str(const Int& v);
std::string Str(const Rat& v);

// Sets passed/budget_hit from the row verdicts and the summary checks.
void Finish(Report& report, bool summary_ok);

// Rows of the circle scan shared by the gauss suite and `count circle`.
extern const std::vector<std::string> kCircleColumns;
Row CircleRow(std::int64_t x);

using SuiteFn = Report (*)(const SuiteContext&);
Report TwoSquareSuite(const SuiteContext& ctx);
Report GaussSuite(const SuiteContext& ctx);
Report DivisorSuite(const SuiteContext& ctx);
Report MinkowskiSuite(const SuiteContext& ctx);
Report SecondTheoremSuite(const SuiteContext& ctx);
Report LinearFormsSuite(const SuiteContext& ctx);
Report PackingSuite(const SuiteContext& ctx);
Report PickSuite(const SuiteContext& ctx);
Report FigurateSuite(const SuiteContext& ctx);
Report CountingSuite(const SuiteContext& ctx);
Report HermiteSuite(const SuiteContext& ctx);

}  // namespace gon::cli::detail
