#include "gon/cli/app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gon/cli/input.hpp"
#include "gon/cli/report.hpp"
#include "gon/cli/suites.hpp"
#include "gon/counting.hpp"
#include "gon/error.hpp"
#include "gon/figurate.hpp"
#include "gon/packing.hpp"
#include "gon/theorems.hpp"
#include "cli/suite_util.hpp"

namespace gon::cli {

namespace {

using nlohmann::ordered_json;

// A command produces either a table or a single JSON document.
struct Output {
  std::optional<Report> report;
  std::optional<ordered_json> doc;
  bool failed = false;  // a verification inside the document failed
};

struct Globals {
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0: library defaults
  int jobs = 1;

  EnumerateOptions options() const {
    EnumerateOptions o;
    if (budget) o.max_points = budget;
    return o;
  }
};

[[noreturn]] void Usage(const std::string& message) { throw Error(ErrorKind::kParse, message); }

std::int64_t IntArg(const std::string& text, const char* name) {
  const Rat value = ParseRat(text);
  if (value.get_den() != 1) Usage(std::string(name) + " must be an integer");
  return ToInt64(value.get_num());
}

Int BigIntArg(const std::string& text, const char* name) {
  const Rat value = ParseRat(text);
  if (value.get_den() != 1) Usage(std::string(name) + " must be an integer");
  return value.get_num();
}

ordered_json Interval(const RealEnclosure& e) { return {{"lo", Lo(e)}, {"hi", Hi(e)}}; }
ordered_json Interval(const Real& x) { return {{"lo", Lo(x)}, {"hi", Hi(x)}}; }

ordered_json IntJson(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return ToString(v);
}

ordered_json RatVecJson(const RatVec& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& x : v) out.push_back(RatJson(x));
  return out;
}

ordered_json PointJson(const LatticePoint& p) {
  ordered_json doc = {{"coeffs", p.coeffs}};
  if (!p.ambient.empty()) doc["ambient"] = RatVecJson(p.ambient);
  return doc;
}

ordered_json TranscriptJson(const std::vector<TranscriptLine>& lines) {
  ordered_json out = ordered_json::array();
  for (const TranscriptLine& l : lines) out.push_back({{"claim", l.claim}, {"verdict", l.verdict}});
  return out;
}

ordered_json CertificateJson(const TheoremCertificate& c) {
  ordered_json witnesses = ordered_json::array();
  for (const LatticePoint& p : c.witnesses) witnesses.push_back(PointJson(p));
  return {{"statement", c.statement},
          {"hypotheses", TranscriptJson(c.hypotheses)},
          {"witnesses", witnesses},
          {"verification", TranscriptJson(c.verification)}};
}

bool CertificateHolds(const TheoremCertificate& c) {
  for (const TranscriptLine& l : c.verification) {
    if (l.verdict != "holds" && l.verdict != "equal") return false;
  }
  return true;
}

ordered_json WitnessJson(const FigurateWitness& w, const Int& m) {
  ordered_json parts = ordered_json::array();
  ordered_json values = ordered_json::array();
  for (const FigurePart& p : w.parts) {
    parts.push_back({{"index", IntJson(p.index)}, {"value", IntJson(p.value)}});
    values.push_back(IntJson(p.value));
  }
  return {{"k", IntJson(w.k)}, {"m", IntJson(m)}, {"parts", parts}, {"values", values},
          {"count", w.parts.size()}};
}

// Table from a sequence of x values, one scan row per x.
Report ScanTable(const std::vector<std::int64_t>& xs, int jobs,
                 const std::function<ErrorScanReport(std::int64_t)>& scan) {
  Report report;
  report.columns = {"x", "exact", "main_lo", "main_hi", "error_lo", "error_hi",
                    "normalized_lo", "normalized_hi"};
  report.rows = ParallelRows(xs.size(), jobs, [&](std::size_t i) {
    const ScanRow s = scan(xs[i]).rows.front();
    return Row{std::to_string(s.x), ToString(s.exact), Lo(s.main), Hi(s.main),
               Lo(s.error),         Hi(s.error),       Lo(s.normalized), Hi(s.normalized)};
  });
  return report;
}

std::vector<std::int64_t> Range(const std::string& from, const std::string& to, const std::string& step) {
  const std::int64_t a = IntArg(from, "--xmin");
  const std::int64_t b = IntArg(to, "--xmax");
  const std::int64_t s = IntArg(step, "--step");
  if (a < 1 || b < a || s < 1) Usage("need 1 <= xmin <= xmax and step >= 1");
  std::vector<std::int64_t> xs;
  for (std::int64_t x = a; x <= b; x += s) xs.push_back(x);
  if (xs.back() != b) xs.push_back(b);
  return xs;
}

// --preset name | --lattice file | --gram file.
struct LatticeArgs {
  std::string preset;
  std::string lattice;
  std::string gram;

  void Add(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "hexagonal, fcc, zn(n), even-sum-2d");
    cmd->add_option("--lattice", lattice, "JSON file with basis or gram");
    cmd->add_option("--gram", gram, "JSON file holding a Gram matrix");
  }
  Lattice Load() const {
    const int given = !preset.empty() + !lattice.empty() + !gram.empty();
    if (given != 1) Usage("give exactly one of --preset, --lattice, --gram");
    if (!preset.empty()) return PresetByName(preset).lattice();
    if (!lattice.empty()) return LatticeFromJson(ReadJsonFile(lattice));
    const nlohmann::json doc = ReadJsonFile(gram);
    return LatticeFromJson(doc.is_array() ? nlohmann::json{{"gram", doc}} : doc);
  }
  std::string Id() const { return !preset.empty() ? preset : !lattice.empty() ? lattice : gram; }
};

ConvexBody LoadBody(const std::string& path) {
  if (path.empty()) Usage("--body is required");
  return BodyFromJson(ReadJsonFile(path));
}

RatMatrix LoadMatrix(const std::string& path) {
  const nlohmann::json doc = ReadJsonFile(path);
  return JsonMatrix(doc.is_object() && doc.contains("matrix") ? doc.at("matrix") : doc);
}

// Flattens a document into a one-row table: nested values become compact
// JSON text.
Report DocTable(const ordered_json& doc) {
  Report report;
  Row row;
  for (const auto& [key, value] : doc.items()) {
    report.columns.push_back(key);
    row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  report.rows.push_back(row);
  return report;
}

class Driver {
 public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(int argc, const char* const* argv) {
    CLI::App app{"gon: exact geometry-of-numbers experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", globals_.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", globals_.out, "write the report to this file");
    app.add_option("--seed", globals_.seed, "64-bit seed for randomized suites");
    app.add_option("--budget", globals_.budget, "enumeration point and search node cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", globals_.jobs, "worker threads")->check(CLI::PositiveNumber);

    AddFigurate(app);
    AddCount(app);
    AddThm(app);
    AddPack(app);
    AddLat(app);
    AddBody(app);
    AddRunSuite(app);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }
    try {
      const Output output = action_();
      return Emit(output);
    } catch (const Error& e) {
      err_ << "gon: " << e.what() << '\n';
      switch (e.kind()) {
        case ErrorKind::kBudget:
          return kExitBudget;
        case ErrorKind::kHypothesis:
        case ErrorKind::kNotFound:
        case ErrorKind::kInadmissible:
        case ErrorKind::kPrecision:
        case ErrorKind::kPrecisionExhausted:
          return kExitFailed;
        default:
          return kExitUsage;
      }
    }
  }

 private:
  int Emit(const Output& output) {
    const Format format = (globals_.format.empty() ? default_format_ : globals_.format) == "csv"
                              ? Format::kCsv
                              : Format::kJson;
    std::ostringstream text;
    bool failed = output.failed;
    bool budget = false;
    if (output.report) {
      Report report = *output.report;
      report.seed = globals_.seed;
      Write(report, format, text);
      failed = failed || !report.passed;
      budget = report.budget_hit;
    } else if (format == Format::kJson) {
      text << output.doc->dump(2) << '\n';
    } else {
      WriteCsv(DocTable(*output.doc), text);
    }
    if (globals_.out.empty()) {
      out_ << text.str();
    } else {
      std::ofstream file(globals_.out, std::ios::binary);
      if (!(file << text.str())) {
        err_ << "gon: cannot write '" << globals_.out << "'\n";
        return kExitUsage;
      }
    }
    if (budget) return kExitBudget;
    return failed ? kExitFailed : kExitOk;
  }

  // Registers `cmd` with an action; `format` is the default output format.
  void On(CLI::App* cmd, std::function<Output()> fn, const char* format = "json") {
    cmd->callback([this, fn = std::move(fn), format] {
      action_ = fn;
      default_format_ = format;
    });
  }

  static Output Doc(ordered_json doc, bool failed = false) { return {std::nullopt, std::move(doc), failed}; }
  static Output Table(Report report) { return {std::move(report), std::nullopt, false}; }

  void AddFigurate(CLI::App& app) {
    auto* fig = app.add_subcommand("figurate", "triangular and polygonal decompositions");
    fig->require_subcommand(1);
    auto* eureka = fig->add_subcommand("eureka", "m as a sum of at most three triangular numbers");
    eureka->add_option("m", s_[0])->required();
    On(eureka, [this] {
      const Int m = BigIntArg(s_[0], "m");
      return Doc(WitnessJson(EurekaDecompose(m), m));
    });
    auto* poly = fig->add_subcommand("polygonal", "m as a sum of at most k k-gonal numbers");
    poly->add_option("k", s_[0])->required();
    poly->add_option("m", s_[1])->required();
    On(poly, [this] {
      const Int k = BigIntArg(s_[0], "k");
      const Int m = BigIntArg(s_[1], "m");
      const std::uint64_t nodes = globals_.budget ? globals_.budget : kPolygonalNodeBudget;
      return Doc(WitnessJson(PolygonalDecompose(k, m, nodes), m));
    });
  }

  void AddCount(CLI::App& app) {
    auto* count = app.add_subcommand("count", "lattice-point counting");
    count->require_subcommand(1);

    auto* circle = count->add_subcommand("circle", "R(x) against pi x with certified Gauss bounds");
    AddRange(circle);
    On(circle, [this] {
      const auto xs = Range(range_[0], range_[1], range_[2]);
      Report report;
      report.columns = detail::kCircleColumns;
      report.rows = ParallelRows(xs.size(), globals_.jobs, [&](std::size_t i) { return detail::CircleRow(xs[i]); });
      detail::Finish(report, true);
      report.summary.clear();
      return Table(report);
    }, "csv");

    auto* divisor = count->add_subcommand("divisor", "D(x) against x log x + (2 gamma - 1) x");
    AddRange(divisor);
    On(divisor, [this] {
      const auto xs = Range(range_[0], range_[1], range_[2]);
      return Table(ScanTable(xs, globals_.jobs, [](std::int64_t x) { return DivisorErrorScan({x}); }));
    }, "csv");

    auto* ball = count->add_subcommand("ball", "#{|v|^2 <= x} against V_d x^(d/2)");
    AddRange(ball);
    ball->add_option("--d", s_[3], "dimension 2..5")->required();
    On(ball, [this] {
      const auto xs = Range(range_[0], range_[1], range_[2]);
      const int d = static_cast<int>(IntArg(s_[3], "--d"));
      return Table(ScanTable(xs, globals_.jobs, [d](std::int64_t x) { return BallVolumeLimitScan(d, {x}); }));
    }, "csv");

    auto* pick = count->add_subcommand("pick", "Pick and Jarnik counts for a lattice polygon");
    pick->add_option("--poly", s_[0], "polygon JSON file")->required();
    On(pick, [this] {
      const LatticePolygon polygon = PolygonFromJson(ReadJsonFile(s_[0]));
      const PickReport p = PickCount(polygon);
      const JarnikReport j = JarnikCheck(polygon);
      ordered_json doc = {{"area", RatJson(p.area)},
                          {"interior", IntJson(p.interior)},
                          {"boundary", IntJson(p.boundary)},
                          {"total", IntJson(p.total)},
                          {"convex", p.convex},
                          {"identity", p.identity_holds ? "holds" : "fails"}};
      if (p.scan_interior) {
        doc["scan_interior"] = IntJson(*p.scan_interior);
        doc["scan_boundary"] = IntJson(*p.scan_boundary);
      }
      doc["perimeter"] = Interval(j.length);
      doc["jarnik"] = j.holds ? "holds" : "fails";
      doc["jarnik_inclusive"] = j.holds_inclusive ? "holds" : "fails";
      return Doc(doc, !p.identity_holds || !j.holds);
    });

    auto* orchard = count->add_subcommand("orchard", "visibility through discs at lattice points");
    orchard->add_option("--R", s_[0], "orchard radius")->required();
    orchard->add_option("--r", s_[1], "tree radius")->required();
    On(orchard, [this] {
      const OrchardResult r = OrchardVisibility(ParseRat(s_[0]), ParseRat(s_[1]));
      ordered_json doc = {{"R", s_[0]}, {"r", s_[1]}, {"blocked", r.blocked}, {"trees", r.trees}};
      if (r.escape) doc["escape"] = RatVecJson(*r.escape);
      doc["certificate"] = r.certificate;
      return Doc(doc);
    });

    auto* rk = count->add_subcommand("rk", "r_k(n)");
    rk->add_option("--n", s_[0])->required();
    rk->add_option("--k", s_[1])->required();
    On(rk, [this] {
      const std::int64_t n = IntArg(s_[0], "--n");
      const int k = static_cast<int>(IntArg(s_[1], "--k"));
      return Doc({{"n", n}, {"k", k}, {"r", IntJson(Rk(n, k))}});
    });

    auto* visible = count->add_subcommand("visible", "density of visible points in [1, N]^2");
    visible->add_option("--n", s_[0])->required();
    On(visible, [this] {
      const std::int64_t n = IntArg(s_[0], "--n");
      const Rat density = VisibleDensity(n);
      const Real limit = Real(6) / (Real::Pi() * Real::Pi());
      return Doc({{"n", n}, {"density", RatJson(density)}, {"density_decimal", DecimalFloor(density, 12)},
                  {"limit_6_over_pi2", Interval(limit)}});
    });
  }

  void AddRange(CLI::App* cmd) {
    cmd->add_option("--xmin", range_[0], "first x (default 1)");
    cmd->add_option("--xmax", range_[1], "last x")->required();
    cmd->add_option("--step", range_[2], "spacing (default 1)");
  }

  void AddThm(CLI::App& app) {
    auto* thm = app.add_subcommand("thm", "constructive lattice-point theorems");
    thm->require_subcommand(1);

    auto* two = thm->add_subcommand("twosquare", "p = a^2 + b^2 for a prime p = 1 mod 4");
    two->add_option("p", s_[0])->required();
    On(two, [this] {
      const TwoSquareResult r = TwoSquare(BigIntArg(s_[0], "p"));
      return Doc({{"p", IntJson(BigIntArg(s_[0], "p"))},
                  {"a", IntJson(r.a)},
                  {"b", IntJson(r.b)},
                  {"q", IntJson(r.q)},
                  {"method", r.wilson ? "wilson" : "nonresidue"},
                  {"certificate", CertificateJson(r.certificate)}},
                 !CertificateHolds(r.certificate));
    });

    auto* four = thm->add_subcommand("foursquare", "m = a^2 + b^2 + c^2 + d^2");
    four->add_option("m", s_[0])->required();
    On(four, [this] {
      const std::int64_t m = IntArg(s_[0], "m");
      const FourSquareResult r = FourSquare(m);
      return Doc({{"m", m}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}});
    });

    auto* mink = thm->add_subcommand("minkowski", "nonzero lattice point in a symmetric convex body");
    lattice_.Add(mink);
    mink->add_option("--body", s_[0], "body JSON file")->required();
    mink->add_flag("--closed", flag_, "allow vol = 2^n det and boundary points");
    On(mink, [this] {
      const MinkowskiResult r = MinkowskiPoint(lattice_.Load(), LoadBody(s_[0]),
                                               flag_ ? MinkowskiMode::kClosed : MinkowskiMode::kStrict,
                                               globals_.options());
      return Doc({{"point", PointJson(r.point)}, {"certificate", CertificateJson(r.certificate)}},
                 !CertificateHolds(r.certificate));
    });

    auto* mordell = thm->add_subcommand("mordell", "grid search for a Minkowski point");
    lattice_.Add(mordell);
    mordell->add_option("--body", s_[0], "body JSON file")->required();
    On(mordell, [this] {
      const MordellResult r = MordellGridSearch(lattice_.Load(), LoadBody(s_[0]), globals_.options());
      ordered_json trace = ordered_json::array();
      for (const MordellStep& step : r.trace) trace.push_back({{"t", step.t}, {"grid_points", step.grid_points}});
      return Doc({{"point", PointJson(r.point)}, {"trace", trace},
                  {"certificate", CertificateJson(r.certificate)}},
                 !CertificateHolds(r.certificate));
    });

    auto* second = thm->add_subcommand("second", "successive minima product bounds");
    lattice_.Add(second);
    second->add_option("--body", s_[0], "body JSON file")->required();
    On(second, [this] {
      const SecondTheoremCheck c = CheckSecondTheorem(lattice_.Load(), LoadBody(s_[0]), globals_.options());
      ordered_json witnesses = ordered_json::array();
      for (const LatticePoint& p : c.minima.witnesses) witnesses.push_back(PointJson(p));
      const bool ok = (c.lower_verdict == "holds" || c.lower_verdict == "equal") &&
                      (c.upper_verdict == "holds" || c.upper_verdict == "equal");
      return Doc({{"lambda_squared", RatVecJson(c.minima.lambda_squared)},
                  {"witnesses", witnesses},
                  {"product", Interval(c.product)},
                  {"lower", RatJson(c.lower)},
                  {"upper", RatJson(c.upper)},
                  {"lower_verdict", c.lower_verdict},
                  {"upper_verdict", c.upper_verdict}},
                 !ok);
    });

    auto* linforms = thm->add_subcommand("linforms", "x != 0 with |Y_j(x)| <= lambda_j");
    linforms->add_option("--matrix", s_[0], "JSON matrix, rows are the forms")->required();
    linforms->add_option("--lambda", s_[1], "comma separated bounds")->required();
    On(linforms, [this] {
      const RatMatrix a = LoadMatrix(s_[0]);
      const RatVec lambda = ParseRatList(s_[1]);
      const LinearFormsResult r = LinearFormsSolve(a, lambda, globals_.options());
      return Doc({{"x", r.x}, {"values", RatVecJson(a * r.x)}, {"certificate", CertificateJson(r.certificate)}},
                 !CertificateHolds(r.certificate));
    });

    auto* approx = thm->add_subcommand("approx", "Dirichlet approximation, simultaneous for several alphas");
    approx->add_option("--alpha", s_[0], "comma separated real expressions")->required();
    approx->add_option("--qmax", s_[1], "denominator bound")->required();
    On(approx, [this] {
      const std::vector<Real> alpha = ParseRealList(s_[0]);
      const Int qmax = BigIntArg(s_[1], "--qmax");
      if (qmax < 1) Usage("--qmax must be positive");
      if (alpha.size() == 1) {
        const DirichletResult r = Dirichlet1d(alpha[0], qmax);
        const bool ok = CertifiedLess(Real(r.error.hi()), Real(Frac(1, qmax))).value_or(false);
        return Doc({{"alpha", s_[0]}, {"p", IntJson(r.x)}, {"q", IntJson(r.y)},
                    {"error", Interval(r.error)}, {"bound", "1/" + ToString(qmax)},
                    {"verdict", ok ? "holds" : "undecided"}},
                   !ok);
      }
      const SimultaneousResult r = SimultaneousApprox(alpha, qmax);
      ordered_json p = ordered_json::array();
      for (const Int& v : r.p) p.push_back(IntJson(v));
      const bool ok = SimultaneousApproxHolds(alpha, r.p, r.q).value_or(false);
      return Doc({{"alpha", s_[0]}, {"p", p}, {"q", IntJson(r.q)}, {"verdict", ok ? "holds" : "undecided"}},
                 !ok);
    });

    auto* formmin = thm->add_subcommand("form-min", "first minimum of a positive definite form");
    formmin->add_option("--gram", s_[0], "JSON Gram matrix")->required();
    On(formmin, [this] {
      const FormMinimum m = FormFirstMinimum(QuadraticForm(LoadMatrix(s_[0])), globals_.options());
      return Doc({{"min", RatJson(m.min)},
                  {"witness", m.witness},
                  {"gamma_power", RatJson(m.gamma_power)},
                  {"minkowski_bound", Interval(m.minkowski_bound)},
                  {"hermite_bound", Interval(m.hermite_bound)},
                  {"minkowski_verdict", m.minkowski_verdict},
                  {"hermite_verdict", m.hermite_verdict}});
    });

    auto* field = thm->add_subcommand("field-bound", "(4/pi)^r2 n!/n^n sqrt|disc|");
    field->add_option("--n", s_[0])->required();
    field->add_option("--r2", s_[1])->required();
    field->add_option("--disc", s_[2], "|discriminant|")->required();
    On(field, [this] {
      const Real bound = MinkowskiFieldBound(static_cast<int>(IntArg(s_[0], "--n")),
                                             static_cast<int>(IntArg(s_[1], "--r2")),
                                             BigIntArg(s_[2], "--disc"));
      return Doc({{"n", s_[0]}, {"r2", s_[1]}, {"disc_abs", s_[2]}, {"bound", Interval(bound)}});
    });
  }

  static ordered_json PackingJson(const PackingReport& p) {
    return {{"lattice", p.lattice_id},
            {"min_norm2", RatJson(p.min_norm2)},
            {"kissing", p.kissing},
            {"density", Interval(p.density)},
            {"density_lo", Lo(p.density)},
            {"density_hi", Hi(p.density)},
            {"hermite_invariant", Interval(p.hermite_invariant)},
            {"density_verdict", p.density_verdict}};
  }

  static std::string HermiteText(const std::optional<HermiteValue>& v) {
    if (!v) return "";
    return "2^(" + ToString(v->exp2) + ") 3^(" + ToString(v->exp3) + ")";
  }

  void AddPack(CLI::App& app) {
    auto* pack = app.add_subcommand("pack", "lattice packings and Hermite constants");
    pack->require_subcommand(1);

    auto* report = pack->add_subcommand("report", "density, kissing number, Hermite invariant");
    lattice_.Add(report);
    On(report, [this] {
      return Doc(PackingJson(AnalyzePacking(lattice_.Load(), lattice_.Id(), globals_.options())));
    });

    auto* bounds = pack->add_subcommand("bounds", "Hermite, Minkowski and Blichfeldt bounds on gamma_n");
    bounds->add_option("--n", s_[0], "dimension or range a..b")->required();
    On(bounds, [this] {
      std::int64_t a = 0;
      std::int64_t b = 0;
      const auto dots = s_[0].find("..");
      if (dots == std::string::npos) {
        a = b = IntArg(s_[0], "--n");
      } else {
        a = IntArg(s_[0].substr(0, dots), "--n");
        b = IntArg(s_[0].substr(dots + 2), "--n");
      }
      if (a > b) Usage("empty range for --n");
      Report r;
      r.columns = {"n", "hermite_lo", "hermite_hi", "minkowski_lo", "minkowski_hi",
                   "blichfeldt_lo", "blichfeldt_hi", "known", "known_lo", "known_hi", "note"};
      for (std::int64_t n = a; n <= b; ++n) {
        const HermiteBounds h = HermiteBoundsFor(static_cast<int>(n));
        r.rows.push_back({std::to_string(n), Lo(h.hermite), Hi(h.hermite), Lo(h.minkowski),
                          Hi(h.minkowski), Lo(h.blichfeldt), Hi(h.blichfeldt), HermiteText(h.known),
                          h.known ? Lo(h.known->value()) : "", h.known ? Hi(h.known->value()) : "",
                          h.note});
      }
      return Table(r);
    });

    auto* voronoi = pack->add_subcommand("voronoi", "Voronoi cell of a planar lattice");
    lattice_.Add(voronoi);
    On(voronoi, [this] {
      const VoronoiCell2d v = VoronoiCell(lattice_.Load());
      ordered_json cell = ordered_json::array();
      for (const Point2& p : v.cell) cell.push_back({RatJson(p.x), RatJson(p.y)});
      ordered_json relevant = ordered_json::array();
      for (const IntVec& r : v.relevant) relevant.push_back(r);
      return Doc({{"coordinates", v.coefficient_coordinates ? "coefficient" : "ambient"},
                  {"vertices", cell},
                  {"relevant", relevant},
                  {"coordinate_area", RatJson(v.coefficient_area)},
                  {"area", Interval(v.area)}});
    });

    auto* mordell = pack->add_subcommand("mordell", "Mordell's inequality between gamma_(n-1) and gamma_n");
    mordell->add_option("--n", s_[0])->required();
    On(mordell, [this] {
      const MordellGammaReport m = MordellGammaCheck(static_cast<int>(IntArg(s_[0], "--n")));
      return Doc({{"n", m.n},
                  {"gamma_n", HermiteText(m.lhs)},
                  {"corrected_rhs", HermiteText(m.corrected_rhs)},
                  {"literal_rhs", HermiteText(m.literal_rhs)},
                  {"corrected_verdict", m.corrected_verdict},
                  {"literal_verdict", m.literal_verdict}});
    });

    auto* scan = pack->add_subcommand("scan", "exhaustive reduced integral form scan");
    scan->add_option("--n", s_[0])->required();
    scan->add_option("--max-diag", s_[1])->required();
    On(scan, [this] {
      const ReducedFormScan r = ScanReducedForms(static_cast<int>(IntArg(s_[0], "--n")),
                                                 static_cast<int>(IntArg(s_[1], "--max-diag")),
                                                 globals_.options());
      return Doc({{"best_gram", MatrixJson(r.best_gram)},
                  {"min", RatJson(r.min)},
                  {"best_gamma_power", RatJson(r.best_gamma_power)},
                  {"forms", r.forms}});
    });

    auto* critical = pack->add_subcommand("critical", "lambda_1 lambda_2 Delta(C) <= det");
    lattice_.Add(critical);
    critical->add_option("--body", s_[0], "body JSON file")->required();
    On(critical, [this] {
      const CriticalDetCheck c = CriticalDetCheck2d(LoadBody(s_[0]), lattice_.Load(), globals_.options());
      return Doc({{"lambda_squared", RatVecJson(c.minima.lambda_squared)},
                  {"critical_det_squared", RatJson(c.critical_squared)},
                  {"lhs", Interval(c.lhs)},
                  {"det", Interval(c.det)},
                  {"verdict", c.verdict}},
                 c.verdict != "holds" && c.verdict != "equal");
    });

    auto* hlawka = pack->add_subcommand("hlawka", "admissible lattice against vol / (2 zeta(n))");
    lattice_.Add(hlawka);
    hlawka->add_option("--body", s_[0], "body JSON file")->required();
    On(hlawka, [this] {
      const HlawkaCheck h = HlawkaWitnessCheck(LoadBody(s_[0]), lattice_.Load(), globals_.options());
      return Doc({{"det", Interval(h.det)}, {"bound", Interval(h.bound)}, {"gap", Interval(h.gap)},
                  {"verdict", h.verdict}});
    });
  }

  void AddLat(CLI::App& app) {
    auto* lat = app.add_subcommand("lat", "lattice presets, reduction and enumeration");
    lat->require_subcommand(1);

    auto* preset = lat->add_subcommand("preset", "exact preset data");
    preset->add_option("name", s_[0])->required();
    On(preset, [this] { return Doc(PresetByName(s_[0]).ToJson()); });

    auto* reduce = lat->add_subcommand("reduce", "Lagrange-Gauss reduction in the plane");
    lattice_.Add(reduce);
    On(reduce, [this] {
      const Reduced2d r = Reduce2d(lattice_.Load());
      ordered_json doc = {{"gram", MatrixJson(r.lattice.gram())},
                          {"transform", {{r.transform[0][0], r.transform[0][1]},
                                         {r.transform[1][0], r.transform[1][1]}}}};
      if (r.lattice.has_basis()) doc["basis"] = MatrixJson(r.lattice.basis().Transpose());
      return Doc(doc);
    });

    auto* shortest = lat->add_subcommand("shortest", "minimal vectors");
    lattice_.Add(shortest);
    On(shortest, [this] {
      const MinimalVectors m = FindMinimalVectors(lattice_.Load(), globals_.options());
      ordered_json vectors = ordered_json::array();
      for (const LatticePoint& p : m.vectors) vectors.push_back(PointJson(p));
      return Doc({{"min_norm2", RatJson(m.min_norm2)}, {"count", m.vectors.size()}, {"vectors", vectors}});
    });

    auto* enumerate = lat->add_subcommand("enumerate", "nonzero points with |x|^2 <= r2");
    lattice_.Add(enumerate);
    enumerate->add_option("--r2", s_[0])->required();
    On(enumerate, [this] {
      const Lattice l = lattice_.Load();
      Report r;
      r.columns = {"coeffs", "ambient", "norm2"};
      for (const LatticePoint& p : EnumerateInBall(l, ParseRat(s_[0]), globals_.options())) {
        r.rows.push_back({VecText(p.coeffs), VecText(p.ambient), ToString(l.Norm2(p.coeffs))});
      }
      return Table(r);
    }, "csv");

    auto* minima = lat->add_subcommand("minima", "successive minima of a body");
    lattice_.Add(minima);
    minima->add_option("--body", s_[0], "body JSON file")->required();
    On(minima, [this] {
      const SuccessiveMinima m = ComputeSuccessiveMinima(lattice_.Load(), LoadBody(s_[0]), globals_.options());
      ordered_json witnesses = ordered_json::array();
      ordered_json lambda = ordered_json::array();
      for (const LatticePoint& p : m.witnesses) witnesses.push_back(PointJson(p));
      for (const Real& x : m.lambda) lambda.push_back(Interval(x));
      return Doc({{"lambda_squared", RatVecJson(m.lambda_squared)}, {"lambda", lambda},
                  {"witnesses", witnesses}});
    });
  }

  void AddBody(CLI::App& app) {
    auto* body = app.add_subcommand("body", "convex bodies");
    body->require_subcommand(1);

    auto* volume = body->add_subcommand("volume", "volume of a body");
    volume->add_option("--body", s_[0], "body JSON file")->required();
    On(volume, [this] {
      const ConvexBody b = LoadBody(s_[0]);
      const Real v = b.Volume();
      ordered_json doc = {{"kind", b.kind()}, {"dim", b.dim()}, {"volume", Interval(v)}};
      if (v.exact()) doc["exact"] = RatJson(*v.exact());
      return Doc(doc);
    });

    auto* classify = body->add_subcommand("classify", "inside, boundary or outside");
    classify->add_option("--body", s_[0], "body JSON file")->required();
    classify->add_option("--point", s_[1], "comma separated rationals")->required();
    On(classify, [this] {
      const ConvexBody b = LoadBody(s_[0]);
      const RatVec x = ParseRatList(s_[1]);
      return Doc({{"point", RatVecJson(x)}, {"gauge2", RatJson(b.GaugeSquared(x))},
                  {"membership", std::string(ToString(b.Classify(x)))}});
    });
  }

  void AddRunSuite(CLI::App& app) {
    auto* run = app.add_subcommand("run-suite", "run a named experiment suite");
    run->add_option("name", s_[0], "suite name");
    run->add_option("--config", s_[1], "JSON experiment config");
    run->add_flag("--list", flag_, "list suites");
    On(run, [this] {
      if (flag_) {
        Report r;
        r.columns = {"suite", "description"};
        for (const SuiteInfo& s : Suites()) r.rows.push_back({s.name, s.description});
        return Table(r);
      }
      if (s_[0].empty() == s_[1].empty()) Usage("give a suite name or --config");
      SuiteConfig config;
      if (!s_[1].empty()) {
        config = SuiteConfigFromJson(ReadJsonFile(s_[1]));
        // Command-line globals override the file only when given.
        if (!globals_.format.empty()) config.format = globals_.format == "csv" ? Format::kCsv : Format::kJson;
        globals_.format = config.format == Format::kCsv ? "csv" : "json";
        if (globals_.out.empty()) globals_.out = config.out;
        if (seed_given_) config.seed = globals_.seed;
        if (jobs_given_) config.jobs = globals_.jobs;
        if (globals_.budget) config.budget = globals_.budget;
        globals_.seed = config.seed;
      } else {
        config.suite = s_[0];
        config.seed = globals_.seed;
        config.jobs = globals_.jobs;
        if (globals_.budget) config.budget = globals_.budget;
      }
      err_ << "gon: suite " << config.suite << " seed " << config.seed << '\n';
      return Table(RunSuite(config));
    }, "csv");
  }

 public:
  void NoteGiven(bool seed, bool jobs) {
    seed_given_ = seed;
    jobs_given_ = jobs;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Globals globals_;
  std::function<Output()> action_;
  std::string default_format_ = "json";
  std::string s_[4];
  std::string range_[3] = {"1", "", "1"};
  bool flag_ = false;
  bool seed_given_ = false;
  bool jobs_given_ = false;
  LatticeArgs lattice_;
};

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  // Config files supply seed and jobs unless the flags are present.
  bool seed = false;
  bool jobs = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    seed = seed || arg == "--seed" || arg.rfind("--seed=", 0) == 0;
    jobs = jobs || arg == "--jobs" || arg.rfind("--jobs=", 0) == 0;
  }
  Driver driver(out, err);
  driver.NoteGiven(seed, jobs);
  return driver.Run(argc, argv);
}

}  // namespace gon::cli
