// Suites over sums of squares, lattice-point counts, polygons and figurate
// numbers.

#include <algorithm>

#include "cli/suite_util.hpp"
#include "gon/body.hpp"
#include "gon/counting.hpp"
#include "gon/figurate.hpp"
#include "gon/theorems.hpp"

namespace gon::cli::detail {

namespace {

std::vector<std::int64_t> PrimesBelow(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(std::max<std::int64_t>(limit, 2)), false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i < limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j < limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

// max(|lo|, |hi|) of an outward-rounded decimal pair.
Rat MaxAbs(const std::string& lo, const std::string& hi) {
  return std::max(Abs(ParseRat(lo)), Abs(ParseRat(hi)));
}

}  // namespace

Report TwoSquareSuite(const SuiteContext& ctx) {
  const std::int64_t limit = ctx.Param("limit", 100'000);
  std::vector<std::int64_t> primes;
  for (std::int64_t p : PrimesBelow(limit)) {
    if (p % 4 == 1) primes.push_back(p);
  }
  Report report;
  report.columns = {"p", "a", "b", "q", "method", "verdict"};
  report.rows = ctx.Rows(primes.size(), report.columns.size(), [&](std::size_t i) {
    const Int p = primes[i];
    const TwoSquareResult r = TwoSquare(p);
    const bool ok = r.a * r.a + r.b * r.b == p && r.a <= r.b && r.a > 0 &&
                    Int((r.q * r.q + 1) % p) == 0;
    return Row{Str(p), Str(r.a), Str(r.b), Str(r.q), r.wilson ? "wilson" : "nonresidue",
               Verdict(ok)};
  });
  const auto below = [&](std::int64_t bound) {
    return std::count_if(primes.begin(), primes.end(), [&](std::int64_t p) { return p < bound; });
  };
  report.Note("limit", Str(limit));
  report.Note("primes_1_mod_4_below_limit", Str(static_cast<std::int64_t>(primes.size())));
  report.Note("primes_1_mod_4_below_10000", Str(static_cast<std::int64_t>(below(10'000))));
  const TwoSquareResult p13 = TwoSquare(13);
  const TwoSquareResult p30449 = TwoSquare(30449);
  report.Note("p13", Str(p13.a) + " " + Str(p13.b));
  report.Note("p30449", Str(p30449.a) + " " + Str(p30449.b));
  Finish(report, p13.a == 2 && p13.b == 3 && p30449.a == 100 && p30449.b == 143);
  return report;
}

Report GaussSuite(const SuiteContext& ctx) {
  const std::int64_t xmax = ctx.Param("xmax", 10'000);
  const std::int64_t extra = ctx.Param("extra", 1'000'000);
  const Rat bound(ctx.Param("normalized_bound", 3));
  std::vector<std::int64_t> xs;
  for (std::int64_t x = 1; x <= xmax; ++x) xs.push_back(x);
  if (extra > xmax) xs.push_back(extra);
  Report report;
  report.columns = kCircleColumns;
  report.rows = ctx.Rows(xs.size(), report.columns.size(),
                         [&](std::size_t i) { return CircleRow(xs[i]); });
  Rat max_abs = 0;
  for (const Row& row : report.rows) {
    if (row.back() == "ok") max_abs = std::max(max_abs, MaxAbs(row[6], row[7]));
  }
  report.Note("max_abs_normalized_hi", DecimalCeil(max_abs, kDecimalDigits));
  report.Note("normalized_bound", Str(bound));
  Finish(report, max_abs <= bound);
  return report;
}

Report DivisorSuite(const SuiteContext& ctx) {
  const std::int64_t exact_max = ctx.Param("exact_max", 10'000);
  const std::int64_t samples = ctx.Param("samples", 1000);
  const std::int64_t sample_max = ctx.Param("sample_max", 100'000'000);
  const Rat bound(ctx.Param("normalized_bound", 2));
  if (samples < 1 || sample_max < samples) throw Error(ErrorKind::kParse, "need 1 <= samples <= sample_max");
  // Naive D(x): running sum of d(n) by trial division.
  std::vector<std::int64_t> naive(static_cast<std::size_t>(exact_max) + 1, 0);
  for (std::int64_t n = 1; n <= exact_max; ++n) {
    naive[static_cast<std::size_t>(n)] = naive[static_cast<std::size_t>(n) - 1] + Divisor(n);
  }
  const std::int64_t step = sample_max / samples;
  Report report;
  report.columns = {"check", "x", "exact", "naive", "main_lo", "main_hi", "error_lo", "error_hi",
                    "normalized_lo", "normalized_hi", "verdict"};
  const auto identity_rows = static_cast<std::size_t>(exact_max);
  report.rows = ctx.Rows(identity_rows + static_cast<std::size_t>(samples), report.columns.size(),
                         [&](std::size_t i) {
    if (i < identity_rows) {
      const auto x = static_cast<std::int64_t>(i) + 1;
      const std::int64_t h = DivisorSummatory(x);
      return Row{"identity", Str(x), Str(h), Str(naive[i + 1]), "", "", "", "", "", "",
                 Verdict(h == naive[i + 1])};
    }
    const std::int64_t x = step * static_cast<std::int64_t>(i - identity_rows + 1);
    const ErrorScanReport scan = DivisorErrorScan({x});
    const ScanRow& s = scan.rows.front();
    Row row = {"error",     Str(x),      Str(s.exact),     "",
               Lo(s.main),  Hi(s.main),  Lo(s.error),      Hi(s.error),
               Lo(s.normalized), Hi(s.normalized)};
    row.push_back(Verdict(Abs(s.normalized.lo()) <= bound && Abs(s.normalized.hi()) <= bound));
    return row;
  });
  Rat max_abs = 0;
  for (const Row& row : report.rows) {
    if (row[0] == "error" && row.back() != "budget" && !row[8].empty()) {
      max_abs = std::max(max_abs, MaxAbs(row[8], row[9]));
    }
  }
  report.Note("max_abs_normalized_hi", DecimalCeil(max_abs, kDecimalDigits));
  report.Note("normalized_bound", Str(bound));
  Finish(report, true);
  return report;
}

Report CountingSuite(const SuiteContext& ctx) {
  const std::int64_t xmax = ctx.Param("xmax", 10'000);
  const std::int64_t prime_limit = ctx.Param("prime_limit", 10'000);
  const std::int64_t ball_x = ctx.Param("ball_x", 100'000);
  const Rat ball_tolerance(1, 20);
  Report report;
  report.columns = {"case", "check", "parameter", "checked", "mismatches",
                    "value_lo", "value_hi", "verdict"};
  report.rows = ctx.Rows(4, report.columns.size(), [&](std::size_t i) -> Row {
    const std::string id = Str(static_cast<std::int64_t>(i));
    if (i == 0) {
      // Prefix sums of r_2 from the convolution table against R(x).
      const std::vector<Int> r2 = RkTable(xmax, 2);
      Int prefix = 0;
      std::int64_t mismatches = 0;
      for (std::int64_t x = 0; x <= xmax; ++x) {
        prefix += r2[static_cast<std::size_t>(x)];
        if (prefix != CircleCount(Rat(x))) ++mismatches;
      }
      return {id, "r2-prefix-vs-circle", "x<=" + Str(xmax), Str(xmax + 1), Str(mismatches), "", "",
              Verdict(mismatches == 0)};
    }
    if (i == 1 || i == 2) {
      const std::int64_t residue = i == 1 ? 1 : 3;
      const Int expected = i == 1 ? 8 : 0;
      std::int64_t checked = 0;
      std::int64_t mismatches = 0;
      for (std::int64_t p : PrimesBelow(prime_limit)) {
        if (p % 4 != residue) continue;
        ++checked;
        if (Rk(p, 2) != expected) ++mismatches;
      }
      return {id, "r2-prime-" + Str(residue) + "-mod-4", "p<" + Str(prime_limit), Str(checked),
              Str(mismatches), Str(expected), Str(expected), Verdict(mismatches == 0)};
    }
    // #{|v|^2 <= x} / x^(3/2) - 4 pi / 3.
    const ErrorScanReport scan = BallVolumeLimitScan(3, {ball_x});
    const RealEnclosure& residual = scan.rows.front().normalized;
    const bool ok = Abs(residual.lo()) < ball_tolerance && Abs(residual.hi()) < ball_tolerance;
    return {id, "ball3-ratio-minus-4pi/3", "x=" + Str(ball_x), "1", ok ? "0" : "1",
            Lo(residual), Hi(residual), Verdict(ok)};
  });
  Finish(report, true);
  return report;
}

namespace {

// Independent re-check of a decomposition of m into at most `max_parts`
// k-gonal numbers.
bool WitnessValid(const Int& k, const Int& m, const FigurateWitness& w, std::size_t max_parts) {
  if (w.k != k || w.parts.size() > max_parts) return false;
  Int sum = 0;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const FigurePart& part = w.parts[i];
    if (part.index < 1 || part.value != Polygonal(k, part.index)) return false;
    if (i > 0 && w.parts[i - 1].index < part.index) return false;
    sum += part.value;
  }
  return sum == m;
}

}  // namespace

Report FigurateSuite(const SuiteContext& ctx) {
  const std::int64_t eureka_max = ctx.Param("eureka_max", 100'000);
  const std::int64_t polygonal_max = ctx.Param("polygonal_max", 10'000);
  const std::int64_t identity_max = ctx.Param("identity_max", 10'000);
  const std::int64_t block = std::max<std::int64_t>(1, ctx.Param("block", 2500));
  const std::uint64_t node_budget = ctx.budget().value_or(kPolygonalNodeBudget);

  struct Task {
    std::string check;
    std::int64_t k;
    std::int64_t from;
    std::int64_t to;
  };
  std::vector<Task> tasks;
  for (std::int64_t m = 1; m <= eureka_max; m += block) {
    tasks.push_back({"eureka", 3, m, std::min(eureka_max, m + block - 1)});
  }
  for (std::int64_t k = 3; k <= 8; ++k) {
    for (std::int64_t m = 1; m <= polygonal_max; m += block) {
      tasks.push_back({"polygonal", k, m, std::min(polygonal_max, m + block - 1)});
    }
  }
  tasks.push_back({"theon", 3, 1, identity_max});
  tasks.push_back({"odd-sum", 4, 1, identity_max});

  Report report;
  report.columns = {"case", "check", "k", "from", "to", "checked", "max_parts", "verdict"};
  report.rows = ctx.Rows(tasks.size(), report.columns.size(), [&](std::size_t i) {
    const Task& t = tasks[i];
    std::int64_t failures = 0;
    std::size_t max_parts = 0;
    if (t.check == "eureka" || t.check == "polygonal") {
      for (std::int64_t m = t.from; m <= t.to; ++m) {
        const FigurateWitness w = t.check == "eureka"
                                      ? EurekaDecompose(m)
                                      : PolygonalDecompose(t.k, m, node_budget);
        max_parts = std::max(max_parts, w.parts.size());
        const auto limit = t.check == "eureka" ? 3 : static_cast<std::size_t>(t.k);
        if (!WitnessValid(t.k, m, w, limit)) ++failures;
      }
    } else if (t.check == "theon") {
      // T_(n-1) + T_n = n^2.
      for (Int n = t.from; n <= t.to; ++n) {
        if (Triangular(n - 1) + Triangular(n) != n * n) ++failures;
      }
    } else {
      // 1 + 3 + ... + (2n - 1) = n^2 = P(4, n).
      Int sum = 0;
      for (Int n = 1; n <= t.to; ++n) {
        sum += 2 * n - 1;
        if (sum != n * n || sum != Polygonal(4, n)) ++failures;
      }
    }
    return Row{Str(static_cast<std::int64_t>(i)), t.check, Str(t.k), Str(t.from), Str(t.to),
               Str(t.to - t.from + 1), max_parts ? Str(static_cast<std::int64_t>(max_parts)) : "",
               Verdict(failures == 0)};
  });
  Finish(report, true);
  return report;
}

namespace {

LatticePolygon RandomConvexPolygon(Rng& rng) {
  for (;;) {
    const std::int64_t radius = rng.Uniform(1, 25);
    const std::int64_t count = rng.Uniform(3, 12);
    std::vector<Point2> points;
    for (std::int64_t j = 0; j < count; ++j) {
      points.push_back({Rat(rng.Uniform(-radius, radius)), Rat(rng.Uniform(-radius, radius))});
    }
    const Polygon hull = ConvexHull(points);
    if (hull.size() < 3) continue;
    std::vector<LatticePoint2> vertices;
    for (const Point2& p : hull) vertices.push_back({p.x.get_num().get_si(), p.y.get_num().get_si()});
    return LatticePolygon(vertices);
  }
}

std::string VerticesText(const LatticePolygon& polygon) {
  std::string out;
  for (const LatticePoint2& v : polygon.vertices()) {
    out += (out.empty() ? "" : ";") + Str(v.x) + " " + Str(v.y);
  }
  return out;
}

}  // namespace

Report PickSuite(const SuiteContext& ctx) {
  const std::int64_t instances = ctx.Param("instances", 500);
  Report report;
  report.columns = {"case",  "vertices", "area",          "interior",      "boundary", "total",
                    "scan_interior", "scan_boundary", "pick", "jarnik", "verdict"};
  report.rows = ctx.Rows(static_cast<std::size_t>(instances), report.columns.size(),
                         [&](std::size_t i) {
    Rng rng = ctx.RowRng(i);
    const LatticePolygon polygon = RandomConvexPolygon(rng);
    const PickReport pick = PickCount(polygon);
    const JarnikReport jarnik = JarnikCheck(polygon);
    const bool scanned = pick.scan_interior && pick.scan_boundary;
    const bool pick_ok = pick.identity_holds && pick.convex && scanned &&
                         *pick.scan_interior == pick.interior && *pick.scan_boundary == pick.boundary;
    return Row{Str(static_cast<std::int64_t>(i)),
               VerticesText(polygon),
               Str(pick.area),
               Str(pick.interior),
               Str(pick.boundary),
               Str(pick.total),
               scanned ? Str(*pick.scan_interior) : "",
               scanned ? Str(*pick.scan_boundary) : "",
               Verdict(pick_ok),
               Verdict(jarnik.holds),
               Verdict(pick_ok && jarnik.holds)};
  });
  Finish(report, true);
  return report;
}

}  // namespace gon::cli::detail
