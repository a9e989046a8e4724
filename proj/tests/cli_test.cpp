#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "gon/cli/app.hpp"
#include "gon/cli/input.hpp"
#include "gon/cli/report.hpp"
#include "gon/cli/suites.hpp"
#include "gon/error.hpp"
#include "json.hpp"

namespace gon::cli {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun Gon(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"gon"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string TempFile(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("gon_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string ErrorCodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.code());
  }
  return "none";
}

TEST(ParseRealExpr, RationalsAndConstants) {
  EXPECT_EQ(ParseRealExpr("3").exact(), Rat(3));
  EXPECT_EQ(ParseRealExpr("-1/2 + 1").exact(), Rat(1, 2));
  EXPECT_EQ(ParseRealExpr("1e6").exact(), Rat(1000000));
  EXPECT_EQ(ParseRealExpr("1.25*4").exact(), Rat(5));
  EXPECT_EQ(ParseRealExpr("2^3").exact(), Rat(8));
  EXPECT_EQ(ParseRealExpr("2^-1").exact(), Rat(1, 2));
  EXPECT_FALSE(ParseRealExpr("2^(1/2)").exact().has_value());
  // sqrt2 and sqrt(2) agree; both square to 2 within the enclosure.
  const RealEnclosure a = (ParseRealExpr("sqrt2") * ParseRealExpr("sqrt(2)")).Eval(80);
  EXPECT_LE(a.lo(), 2);
  EXPECT_GE(a.hi(), 2);
  const RealEnclosure pi = ParseRealExpr("pi").Eval(64);
  EXPECT_LT(pi.lo(), Rat(355, 113));
  EXPECT_GT(pi.hi(), Rat(333, 106));
  const RealEnclosure g = ParseRealExpr("gamma").Eval(64);
  EXPECT_LT(g.lo(), Rat(5773, 10000));
  EXPECT_GT(g.hi(), Rat(5772, 10000));
}

TEST(ParseRealExpr, RejectsMalformedInput) {
  for (const char* bad : {"", "2+", "foo", "sqrt(-1)", "log(0)", "1/0", "(1", "2^pi", "1,2"}) {
    EXPECT_EQ(ErrorCodeOf([&] { ParseRealExpr(bad); }), "parse") << bad;
  }
  EXPECT_EQ(ParseRatList("1/2, 3").size(), 2u);
  EXPECT_EQ(ErrorCodeOf([] { ParseRatList("1/2,sqrt2"); }), "parse");
  EXPECT_EQ(ParseRealList("sqrt2,sqrt(3),log(2)").size(), 3u);
}

TEST(Presets, ExactData) {
  const Preset even = PresetByName("even-sum-2d");
  ASSERT_TRUE(even.basis);
  EXPECT_EQ(even.basis->Column(0), (RatVec{2, 0}));
  EXPECT_EQ(even.basis->Column(1), (RatVec{1, 1}));
  EXPECT_EQ(PresetByName("hexagonal").gram, (RatMatrix{{1, Rat(1, 2)}, {Rat(1, 2), 1}}));
  EXPECT_FALSE(PresetByName("hexagonal").basis);
  EXPECT_EQ(PresetByName("zn(3)").gram, RatMatrix::Identity(3));
  const Lattice fcc = PresetByName("fcc").lattice();
  EXPECT_EQ(fcc.det_squared(), Rat(4));
  for (const char* bad : {"zn(1)", "zn(9)", "zn(x)", "hex", ""}) {
    EXPECT_EQ(ErrorCodeOf([&] { PresetByName(bad); }), "parse") << bad;
  }
}

TEST(JsonInput, LatticeBodyPolygon) {
  const Lattice l = LatticeFromJson(nlohmann::json::parse(R"({"basis": [[2, 0], [1, 1]]})"));
  EXPECT_EQ(l.det_squared(), Rat(4));
  const Lattice g = LatticeFromJson(nlohmann::json::parse(R"({"gram": [[1, "1/2"], ["1/2", 1]]})"));
  EXPECT_EQ(g.det_squared(), Rat(3, 4));
  EXPECT_EQ(ErrorCodeOf([] { LatticeFromJson(nlohmann::json::parse(R"({"basis": [[1, 2], [2, 4]]})")); }),
            "parse");
  EXPECT_EQ(ErrorCodeOf([] { LatticeFromJson(nlohmann::json::parse(R"({"gram": [[1, 0.5]]})")); }),
            "parse");

  const ConvexBody box = BodyFromJson(nlohmann::json::parse(R"({"type": "box", "halfwidths": ["3/2", 1]})"));
  EXPECT_EQ(box.Volume().exact(), Rat(6));
  const ConvexBody ball = BodyFromJson(nlohmann::json::parse(R"({"type": "ball", "n": 2, "radius_squared": 4})"));
  EXPECT_EQ(ball.kind(), ConvexBody::Ball(2, 4).kind());
  EXPECT_EQ(ErrorCodeOf([] { BodyFromJson(nlohmann::json::parse(R"({"type": "torus"})")); }), "parse");
  EXPECT_EQ(ErrorCodeOf([] { BodyFromJson(nlohmann::json::parse(R"({"type": "box", "halfwidths": [-1, 1]})")); }),
            "parse");

  const LatticePolygon p = PolygonFromJson(nlohmann::json::parse(R"([[0, 0], [4, 0], [0, 3]])"));
  EXPECT_EQ(p.Area(), Rat(6));
  EXPECT_EQ(ErrorCodeOf([] { PolygonFromJson(nlohmann::json::parse(R"([[0, 0], [1, 1], [2, 2]])")); }),
            "parse");
}

TEST(Report, CsvQuotingAndJsonShape) {
  Report r;
  r.name = "demo";
  r.columns = {"a", "b"};
  r.rows = {{"1", "x,y"}, {"say \"hi\"", "2/3"}};
  r.Note("k", "v");
  std::ostringstream csv;
  WriteCsv(r, csv);
  EXPECT_EQ(csv.str(), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",2/3\n");
  std::ostringstream json;
  WriteJson(r, json);
  const auto doc = nlohmann::json::parse(json.str());
  EXPECT_EQ(doc["suite"], "demo");
  EXPECT_EQ(doc["rows"][0]["b"], "x,y");
  EXPECT_EQ(doc["summary"]["k"], "v");
}

TEST(Report, IntervalEndpointsRoundOutward) {
  const RealEnclosure e = Real::Pi().Eval(128);
  EXPECT_EQ(Lo(e), "3.141592653589");
  EXPECT_EQ(Hi(e), "3.141592653590");
  EXPECT_EQ(Lo(RealEnclosure(Rat(-1, 3), Rat(-1, 3))), "-0.333333333334");
  EXPECT_EQ(Hi(RealEnclosure(Rat(-1, 3), Rat(-1, 3))), "-0.333333333333");
  EXPECT_EQ(Lo(RealEnclosure(Rat(2), Rat(2))), "2.000000000000");
}

TEST(ParallelRows, OrderedByIndexForAnyJobCount) {
  const auto fn = [](std::size_t i) { return Row{std::to_string(i * i)}; };
  const auto one = ParallelRows(200, 1, fn);
  for (int jobs : {2, 3, 8}) EXPECT_EQ(ParallelRows(200, jobs, fn), one);
  EXPECT_EQ(one[13][0], "169");
  EXPECT_THROW(ParallelRows(50, 4,
                            [](std::size_t i) -> Row {
                              if (i == 17) throw std::runtime_error("boom");
                              return {"x"};
                            }),
               std::runtime_error);
}

TEST(SuiteConfig, ParsesAndValidates) {
  const SuiteConfig c = SuiteConfigFromJson(nlohmann::json::parse(
      R"({"suite": "pick", "seed": 7, "jobs": 2, "budget": 1000, "format": "json", "params": {"instances": 5}})"));
  EXPECT_EQ(c.suite, "pick");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.jobs, 2);
  EXPECT_EQ(c.budget, 1000u);
  EXPECT_EQ(c.format, Format::kJson);
  EXPECT_EQ(RunSuite(c).rows.size(), 5u);
  for (const char* bad : {R"({})", R"({"suite": 3})", R"({"suite": "pick", "seed": -1})",
                          R"({"suite": "pick", "budget": 0})", R"({"suite": "pick", "format": "xml"})",
                          R"({"suite": "pick", "params": []})"}) {
    EXPECT_EQ(ErrorCodeOf([&] { SuiteConfigFromJson(nlohmann::json::parse(bad)); }), "parse") << bad;
  }
  SuiteConfig unknown;
  unknown.suite = "nope";
  EXPECT_EQ(ErrorCodeOf([&] { RunSuite(unknown); }), "parse");
}

TEST(Suites, SeedChangesRandomRowsButNotShape) {
  SuiteConfig a;
  a.suite = "pick";
  a.params = {{"instances", 20}};
  SuiteConfig b = a;
  b.seed = 99;
  const Report ra = RunSuite(a);
  const Report rb = RunSuite(b);
  EXPECT_EQ(ra.columns, rb.columns);
  EXPECT_NE(ra.rows, rb.rows);
  EXPECT_TRUE(ra.passed);
  EXPECT_TRUE(rb.passed);
}

TEST(Suites, ByteIdenticalAcrossJobCounts) {
  for (const char* suite : {"minkowski", "linear-forms", "hermite"}) {
    std::string reference;
    for (int jobs : {1, 2, 5}) {
      SuiteConfig c;
      c.suite = suite;
      c.seed = 2024;
      c.jobs = jobs;
      c.params = {{"instances", 12}, {"subthreshold", 4}, {"complex_instances", 4}};
      std::ostringstream out;
      WriteJson(RunSuite(c), out);
      if (reference.empty()) reference = out.str();
      EXPECT_EQ(out.str(), reference) << suite << " jobs " << jobs;
    }
  }
}

TEST(Suites, BudgetMarksRowsAndExitsThree) {
  SuiteConfig c;
  c.suite = "minkowski";
  c.budget = 1;
  c.params = {{"instances", 4}, {"subthreshold", 0}};
  const Report r = RunSuite(c);
  EXPECT_TRUE(r.budget_hit);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.rows[0].back(), "budget");

  const CliRun run = Gon({"run-suite", "minkowski", "--budget", "1", "--format", "csv"});
  EXPECT_EQ(run.status, kExitBudget);
  EXPECT_NE(run.out.find(",budget\n"), std::string::npos);
}

TEST(Cli, TwoSquareExample) {
  const CliRun run = Gon({"thm", "twosquare", "30449"});
  ASSERT_EQ(run.status, kExitOk) << run.err;
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["a"], 100);
  EXPECT_EQ(doc["b"], 143);
  EXPECT_EQ(Gon({"thm", "twosquare", "15"}).status, kExitUsage);
  EXPECT_EQ(Gon({"thm", "twosquare", "abc"}).status, kExitUsage);
}

TEST(Cli, CircleCsvAllGaussVerdictsOk) {
  const CliRun run = Gon({"count", "circle", "--xmax", "2000", "--format", "csv"});
  ASSERT_EQ(run.status, kExitOk) << run.err;
  const auto rows = ParseCsv(run.out);
  ASSERT_EQ(rows.size(), 2001u);
  EXPECT_EQ(rows[0].front(), "x");
  EXPECT_EQ(rows[0].back(), "gauss");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].back(), "ok") << i;
}

TEST(Cli, CsvCellsAreExactOrIntervalEnds) {
  // Integers and rationals anywhere; decimals only in *_lo / *_hi columns.
  const std::regex exact(R"(-?\d+(/\d+)?)");
  const std::regex decimal(R"(-?\d+\.\d+)");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "circle", "--xmax", "300", "--step", "7"},
           {"count", "divisor", "--xmax", "100000", "--step", "997"},
           {"count", "ball", "--d", "3", "--xmax", "500", "--step", "50"},
           {"run-suite", "hermite", "--format", "csv"},
           {"run-suite", "packing", "--format", "csv"}}) {
    const CliRun run = Gon(args);
    ASSERT_EQ(run.status, kExitOk) << args[1] << run.err;
    const auto rows = ParseCsv(run.out);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const std::string& col = rows[0][c];
        const std::string& cell = rows[r][c];
        if (std::regex_match(cell, decimal)) {
          const bool interval = col.size() > 3 && (col.ends_with("_lo") || col.ends_with("_hi"));
          EXPECT_TRUE(interval) << col << "=" << cell;
        } else if (!cell.empty() && std::isdigit(static_cast<unsigned char>(cell.back()))) {
          if (col != "lambda_squared" && col != "witness") {
            EXPECT_TRUE(std::regex_match(cell, exact)) << col << "=" << cell;
          }
        }
      }
    }
  }
}

TEST(Cli, PackReportHexagonalBrackets0_9069) {
  const CliRun run = Gon({"pack", "report", "--preset", "hexagonal"});
  ASSERT_EQ(run.status, kExitOk) << run.err;
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["kissing"], 6);
  const Rat lo = ParseRat(doc["density_lo"].get<std::string>());
  const Rat hi = ParseRat(doc["density_hi"].get<std::string>());
  EXPECT_LT(lo, hi);
  EXPECT_LT(Abs(lo - Rat(9069, 10000)), Rat(1, 10000));
  EXPECT_LT(Abs(hi - Rat(9069, 10000)), Rat(1, 10000));
}

TEST(Cli, PresetOutputAndUnknownPreset) {
  const CliRun run = Gon({"lat", "preset", "even-sum-2d"});
  ASSERT_EQ(run.status, kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["basis"], nlohmann::json::parse("[[2, 0], [1, 1]]"));
  EXPECT_EQ(nlohmann::json::parse(Gon({"lat", "preset", "hexagonal"}).out)["gram"],
            nlohmann::json::parse(R"([[1, "1/2"], ["1/2", 1]])"));
  EXPECT_EQ(nlohmann::json::parse(Gon({"lat", "preset", "zn(3)"}).out)["gram"],
            nlohmann::json::parse("[[1, 0, 0], [0, 1, 0], [0, 0, 1]]"));
  EXPECT_EQ(Gon({"lat", "preset", "e8"}).status, kExitUsage);
  EXPECT_EQ(Gon({"pack", "report", "--preset", "e8"}).status, kExitUsage);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(Gon({}).status, kExitUsage);
  EXPECT_EQ(Gon({"count"}).status, kExitUsage);
  EXPECT_EQ(Gon({"count", "circle"}).status, kExitUsage);
  EXPECT_EQ(Gon({"count", "circle", "--xmax", "10", "--format", "xml"}).status, kExitUsage);
  EXPECT_EQ(Gon({"count", "circle", "--xmax", "1/2"}).status, kExitUsage);
  EXPECT_EQ(Gon({"run-suite"}).status, kExitUsage);
  EXPECT_EQ(Gon({"run-suite", "nope"}).status, kExitUsage);
  EXPECT_EQ(Gon({"run-suite", "--config", "/nonexistent/config.json"}).status, kExitUsage);
  EXPECT_EQ(Gon({"count", "pick", "--poly", TempFile("bad.json", "{not json")}).status, kExitUsage);
  EXPECT_EQ(Gon({"--help"}).status, kExitOk);
}

TEST(Cli, BudgetErrorsExitThree) {
  EXPECT_EQ(Gon({"count", "divisor", "--xmin", "2e12", "--xmax", "2e12"}).status, kExitBudget);
  EXPECT_EQ(Gon({"count", "orchard", "--R", "5000", "--r", "1/2"}).status, kExitBudget);
  EXPECT_EQ(Gon({"figurate", "polygonal", "5", "100000000"}).status, kExitBudget);
}

TEST(Cli, FileInputsAndOutFlag) {
  const std::string lattice = TempFile("lattice.json", R"({"basis": [[1, 0], [0, 1]]})");
  const std::string body = TempFile("body.json", R"({"type": "cube", "n": 2, "halfwidth": "11/10"})");
  const CliRun mink = Gon({"thm", "minkowski", "--lattice", lattice, "--body", body});
  ASSERT_EQ(mink.status, kExitOk) << mink.err;
  EXPECT_EQ(nlohmann::json::parse(mink.out)["point"]["coeffs"], nlohmann::json::parse("[1, 0]"));

  const std::string unit = TempFile("unit.json", R"({"type": "cube", "n": 2, "halfwidth": 1})");
  EXPECT_EQ(Gon({"thm", "minkowski", "--lattice", lattice, "--body", unit}).status, kExitFailed);
  EXPECT_EQ(Gon({"thm", "minkowski", "--lattice", lattice, "--body", unit, "--closed"}).status, kExitOk);

  const std::string poly = TempFile("poly.json", R"({"vertices": [[0, 0], [10, 0], [10, 10], [0, 10]]})");
  const auto pick = nlohmann::json::parse(Gon({"count", "pick", "--poly", poly}).out);
  EXPECT_EQ(pick["interior"], 81);
  EXPECT_EQ(pick["boundary"], 40);

  const std::string matrix = TempFile("matrix.json", R"([[1, "1/2"], [0, 1]])");
  const auto lf = nlohmann::json::parse(Gon({"thm", "linforms", "--matrix", matrix, "--lambda", "1/2,2"}).out);
  EXPECT_EQ(lf["certificate"]["verification"].back()["verdict"], "holds");

  const auto out = std::filesystem::temp_directory_path() / "gon_cli_test_out.csv";
  std::filesystem::remove(out);
  const CliRun written = Gon({"count", "circle", "--xmax", "3", "--out", out.string()});
  EXPECT_EQ(written.status, kExitOk);
  EXPECT_TRUE(written.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("x,exact,main_lo", 0), 0u);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(nlohmann::json::parse(Gon({"figurate", "eureka", "6"}).out)["values"],
            nlohmann::json::parse("[3, 3]"));
  EXPECT_EQ(nlohmann::json::parse(Gon({"figurate", "polygonal", "4", "7"}).out)["values"],
            nlohmann::json::parse("[4, 1, 1, 1]"));
  const auto orchard = nlohmann::json::parse(Gon({"count", "orchard", "--R", "20", "--r", "1/2"}).out);
  EXPECT_EQ(orchard["blocked"], true);
  EXPECT_EQ(orchard["trees"], 1256);
  EXPECT_EQ(nlohmann::json::parse(Gon({"count", "rk", "--n", "25", "--k", "2"}).out)["r"], 12);
  const auto approx = nlohmann::json::parse(Gon({"thm", "approx", "--alpha", "sqrt2,sqrt3", "--qmax", "1000"}).out);
  EXPECT_EQ(approx["verdict"], "holds");
  const auto dirichlet = nlohmann::json::parse(Gon({"thm", "approx", "--alpha", "pi", "--qmax", "100"}).out);
  // 355/113 is out of range, so 22/7 is best for q <= 100.
  EXPECT_EQ(dirichlet["p"], 22);
  EXPECT_EQ(dirichlet["q"], 7);
  const CliRun bounds = Gon({"pack", "bounds", "--n", "2..8", "--format", "csv"});
  ASSERT_EQ(bounds.status, kExitOk);
  EXPECT_EQ(ParseCsv(bounds.out).size(), 8u);
  EXPECT_EQ(nlohmann::json::parse(Gon({"pack", "mordell", "--n", "4"}).out)["corrected_verdict"], "equal");
  EXPECT_EQ(nlohmann::json::parse(Gon({"pack", "voronoi", "--preset", "zn(2)"}).out)["coordinate_area"], 1);
  EXPECT_EQ(nlohmann::json::parse(Gon({"lat", "shortest", "--preset", "fcc"}).out)["count"], 12);
  const auto reduced = nlohmann::json::parse(Gon({"lat", "reduce", "--preset", "even-sum-2d"}).out);
  EXPECT_EQ(reduced["gram"][0][0], 2);
  const CliRun list = Gon({"run-suite", "--list"});
  EXPECT_EQ(ParseCsv(list.out).size(), Suites().size() + 1);
}

TEST(Cli, ConfigFileRunsSuiteAndLogsSeed) {
  const std::string config =
      TempFile("config.json", R"({"suite": "pick", "seed": 5, "format": "json", "params": {"instances": 3}})");
  const CliRun a = Gon({"run-suite", "--config", config});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["rows"].size(), 3u);
  EXPECT_NE(a.err.find("seed 5"), std::string::npos);
  // The flag wins over the file.
  const CliRun b = Gon({"run-suite", "--config", config, "--seed", "6", "--jobs", "3"});
  EXPECT_EQ(nlohmann::json::parse(b.out)["seed"], 6);
  EXPECT_NE(a.out, b.out);
}

}  // namespace
}  // namespace gon::cli
