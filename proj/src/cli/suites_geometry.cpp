// Suites over Minkowski-type theorems, linear forms, packings and Hermite
// bounds.

#include "cli/suite_util.hpp"
#include "gon/cli/input.hpp"
#include "gon/packing.hpp"
#include "gon/theorems.hpp"

namespace gon::cli::detail {

namespace {

Rat RandomFraction(Rng& rng, std::int64_t num_lo, std::int64_t num_hi, std::int64_t den_hi) {
  return Frac(rng.Uniform(num_lo, num_hi), rng.Uniform(1, den_hi));
}

RatMatrix RandomNonsingular(Rng& rng, std::size_t n, std::int64_t bound) {
  for (;;) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.Uniform(-bound, bound);
    }
    if (m.Determinant() != 0) return m;
  }
}

// A box, ball or forms box scaled by s = k/64 with s^n vol >= (6/5) 2^n det,
// k minimal; the comparison uses rational enclosure ends only.
ConvexBody RandomBodyAboveThreshold(Rng& rng, const Lattice& lattice) {
  const std::size_t n = lattice.dim();
  ConvexBody body = ConvexBody::Cube(n, 1);
  switch (rng.Uniform(0, 2)) {
    case 0: {
      RatVec h;
      for (std::size_t i = 0; i < n; ++i) h.push_back(RandomFraction(rng, 1, 4, 4));
      body = ConvexBody::Box(h);
      break;
    }
    case 1:
      body = ConvexBody::Ball(n, RandomFraction(rng, 1, 4, 4));
      break;
    default:
      body = ConvexBody::Forms(RandomNonsingular(rng, n, 2), RatVec(n, 1));
  }
  const Rat vol = body.Volume().Eval(64).lo();
  const Rat target = Rat(6, 5) * Pow(Rat(2), static_cast<long>(n)) * lattice.det_abs().Eval(64).hi();
  std::int64_t lo = 0;  // fails
  std::int64_t hi = 1;  // grows until it passes
  const auto passes = [&](std::int64_t k) {
    return Pow(Frac(k, 64), static_cast<long>(n)) * vol >= target;
  };
  while (!passes(hi)) hi *= 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (passes(mid) ? hi : lo) = mid;
  }
  return body.Scale(Frac(hi, 64));
}

std::string PointText(const LatticePoint& p) { return VecText(p.coeffs); }

bool NonzeroInside(const ConvexBody& body, const LatticePoint& p) {
  return p.coeffs != IntVec(p.coeffs.size(), 0) && body.Classify(p.ambient) == Membership::kInside;
}

bool HoldsOrEqual(const std::string& verdict) { return verdict == "holds" || verdict == "equal"; }

}  // namespace

Report MinkowskiSuite(const SuiteContext& ctx) {
  const auto above = static_cast<std::size_t>(ctx.Param("instances", 200));
  const auto below = static_cast<std::size_t>(ctx.Param("subthreshold", 50));
  Report report;
  report.columns = {"case", "kind", "n", "det", "body", "vol_lo", "vol_hi", "threshold",
                    "minkowski_point", "mordell_point", "verdict"};
  report.rows = ctx.Rows(above + below, report.columns.size(), [&](std::size_t i) {
    Rng rng = ctx.RowRng(i);
    const std::size_t n = 2 + i % 2;
    if (i < above) {
      const Lattice lattice = Lattice::FromBasis(RandomNonsingular(rng, n, 3));
      const ConvexBody body = RandomBodyAboveThreshold(rng, lattice);
      const MinkowskiResult a = MinkowskiPoint(lattice, body, MinkowskiMode::kStrict, ctx.options());
      const MordellResult b = MordellGridSearch(lattice, body, ctx.options());
      const Rat det = *lattice.det_abs_exact();
      const Real vol = body.Volume();
      return Row{Str(static_cast<std::int64_t>(i)), "above", Str(static_cast<std::int64_t>(n)),
                 Str(det), body.kind(), Lo(vol), Hi(vol),
                 Str(Pow(Rat(2), static_cast<long>(n)) * det), PointText(a.point), PointText(b.point),
                 Verdict(NonzeroInside(body, a.point) && NonzeroInside(body, b.point))};
    }
    // Box around Z^n with every halfwidth <= 1 and volume < 2^n.
    RatVec h;
    Rat product = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t den = rng.Uniform(1, 8);
      h.push_back(Frac(rng.Uniform(1, den), den));
      product *= h.back();
    }
    if (product == 1) h[0] = Rat(1, 2);
    const ConvexBody box = ConvexBody::Box(h);
    const Lattice zn = Lattice::FromBasis(RatMatrix::Identity(n));
    bool rejected = false;
    try {
      MinkowskiPoint(zn, box, MinkowskiMode::kStrict, ctx.options());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kHypothesis) throw;
      rejected = true;
    }
    // No nonzero integer point may lie in the open box.
    bool empty = true;
    for (const BodyPoint& p : PointsInBody(zn, box, 1, ctx.options())) {
      if (p.gauge2 < 1) empty = false;
    }
    const Real vol = box.Volume();
    return Row{Str(static_cast<std::int64_t>(i)), "below", Str(static_cast<std::int64_t>(n)), "1",
               box.kind() + " " + VecText(h), Lo(vol), Hi(vol),
               Str(Pow(Rat(2), static_cast<long>(n))), rejected ? "rejected" : "accepted",
               empty ? "none" : "found", Verdict(rejected && empty)};
  });
  Finish(report, true);
  return report;
}

Report SecondTheoremSuite(const SuiteContext& ctx) {
  const auto instances = static_cast<std::size_t>(ctx.Param("instances", 100));
  Report report;
  report.columns = {"case", "kind", "n", "body", "lambda_squared", "product_lo", "product_hi",
                    "lower", "upper", "lower_verdict", "upper_verdict", "verdict"};
  // Three cube rows [-1, 1]^n with Z^n for n = 2, 3, 4 follow the random ones.
  report.rows = ctx.Rows(instances + 3, report.columns.size(), [&](std::size_t i) {
    Rng rng = ctx.RowRng(i);
    const bool cube = i >= instances;
    const std::size_t n = cube ? 2 + (i - instances) : 2 + i % 3;
    const Lattice lattice = cube ? Lattice::FromBasis(RatMatrix::Identity(n))
                                 : Lattice::FromBasis(RandomNonsingular(rng, n, 3));
    const ConvexBody body = cube ? ConvexBody::Cube(n, 1) : RandomBodyAboveThreshold(rng, lattice);
    const SecondTheoremCheck c = CheckSecondTheorem(lattice, body, ctx.options());
    bool ok = HoldsOrEqual(c.lower_verdict) && HoldsOrEqual(c.upper_verdict);
    if (cube) ok = ok && c.upper_verdict == "equal" && c.product.exact() == c.upper;
    return Row{Str(static_cast<std::int64_t>(i)), cube ? "cube" : "random",
               Str(static_cast<std::int64_t>(n)), body.kind(), VecText(c.minima.lambda_squared),
               Lo(c.product), Hi(c.product), Str(c.lower), Str(c.upper), c.lower_verdict,
               c.upper_verdict, Verdict(ok)};
  });
  Finish(report, true);
  return report;
}

Report LinearFormsSuite(const SuiteContext& ctx) {
  const auto real_count = static_cast<std::size_t>(ctx.Param("instances", 100));
  const auto complex_count = static_cast<std::size_t>(ctx.Param("complex_instances", 30));
  Report report;
  report.columns = {"case", "kind", "n", "det_abs", "bounds", "x", "verdict"};
  report.rows = ctx.Rows(real_count + complex_count, report.columns.size(), [&](std::size_t i) {
    Rng rng = ctx.RowRng(i);
    const std::size_t n = 2 + i % 3;
    const std::string id = Str(static_cast<std::int64_t>(i));
    if (i < real_count) {
      RatMatrix a(n, n);
      do {
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) a(r, c) = RandomFraction(rng, -5, 5, 4);
        }
      } while (a.Determinant() == 0);
      const Rat det = Abs(a.Determinant());
      // lambda_1 .. lambda_(n-1) random, lambda_n closing the product at
      // |det| (or twice that on odd rows).
      RatVec lambda(n);
      Rat product = 1;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        lambda[j] = RandomFraction(rng, 1, 4, 4);
        product *= lambda[j];
      }
      lambda[n - 1] = det / product * (i % 2 ? 2 : 1);
      const LinearFormsResult r = LinearFormsSolve(a, lambda, ctx.options());
      const RatVec y = a * r.x;
      bool ok = r.x != IntVec(n, 0);
      for (std::size_t j = 0; j < n; ++j) ok = ok && Abs(y[j]) <= lambda[j];
      return Row{id, "real", Str(static_cast<std::int64_t>(n)), Str(det), VecText(lambda),
                 VecText(r.x), Verdict(ok)};
    }
    // n = r + 2s with s >= 1 conjugate pairs.
    const std::size_t s = 1 + static_cast<std::size_t>(rng.Uniform(0, static_cast<std::int64_t>(n) / 2 - 1));
    const std::size_t r_count = n - 2 * s;
    for (;;) {
      std::vector<RatVec> reals(r_count, RatVec(n));
      std::vector<ComplexFormPair> pairs(s, {RatVec(n), RatVec(n)});
      for (auto& row : reals) {
        for (auto& v : row) v = rng.Uniform(-4, 4);
      }
      for (auto& pair : pairs) {
        for (auto& v : pair.re) v = rng.Uniform(-4, 4);
        for (auto& v : pair.im) v = rng.Uniform(-4, 4);
      }
      ComplexLinearFormsResult result;
      try {
        result = ComplexLinearFormsSolve(reals, pairs, ctx.options());
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kHypothesis) continue;  // singular draw
        throw;
      }
      // Certified |Y_j(x)| <= bound for every real form and every pair.
      const RatVec x = ToRat(result.x);
      const Real bound2 = result.bound * result.bound;
      bool ok = result.x != IntVec(n, 0);
      for (const RatVec& row : reals) {
        const Rat y = Dot(row, x);
        ok = ok && CertifiedLessEqual(Real(y * y), bound2).value_or(false);
      }
      for (const ComplexFormPair& pair : pairs) {
        const Rat re = Dot(pair.re, x);
        const Rat im = Dot(pair.im, x);
        ok = ok && CertifiedLessEqual(Real(re * re + im * im), bound2).value_or(false);
      }
      return Row{id, "complex s=" + Str(static_cast<std::int64_t>(s)),
                 Str(static_cast<std::int64_t>(n)), "sqrt " + Str(result.det_abs_squared),
                 Lo(result.bound) + " " + Hi(result.bound), VecText(result.x), Verdict(ok)};
    }
  });
  Finish(report, true);
  return report;
}

namespace {

bool Overlap(const Real& a, const Real& b) {
  const RealEnclosure x = a.Eval(160);
  const RealEnclosure y = b.Eval(160);
  return x.lo() <= y.hi() && y.lo() <= x.hi();
}

}  // namespace

Report PackingSuite(const SuiteContext& ctx) {
  struct Expected {
    const char* preset;
    std::size_t kissing;
    Real density;
    Rat gamma_power;
    std::optional<Rat> printed;  // four-digit value the density must match
  };
  const Real pi = Real::Pi();
  const std::vector<Expected> cases = {
      {"hexagonal", 6, pi / (Real(2) * Real::Sqrt(3)), Rat(4, 3), Rat(9069, 10000)},
      {"fcc", 12, pi / (Real(3) * Real::Sqrt(2)), Rat(2), Rat(7404, 10000)},
      {"zn(2)", 4, pi / Real(4), Rat(1), std::nullopt},
  };
  Report report;
  report.columns = {"lattice", "n", "min_norm2", "kissing", "density_lo", "density_hi",
                    "density_check", "gamma_power", "delta_gamma", "verdict"};
  report.rows = ctx.Rows(cases.size(), report.columns.size(), [&](std::size_t i) {
    const Expected& e = cases[i];
    const Lattice lattice = PresetByName(e.preset).lattice();
    const PackingReport p = AnalyzePacking(lattice, e.preset, ctx.options());
    const std::size_t n = lattice.dim();
    // Density encloses the closed form and lies within 10^-4 of the printed
    // four-digit value.
    bool density_ok = Overlap(p.density, e.density);
    if (e.printed) {
      const RealEnclosure d = p.density.Enclose(Rat(1, 1'000'000));
      density_ok = density_ok && Abs(d.lo() - *e.printed) <= Rat(1, 10'000) &&
                   Abs(d.hi() - *e.printed) <= Rat(1, 10'000);
    }
    const FormMinimum m = FormFirstMinimum(QuadraticForm(lattice.gram()), ctx.options());
    const bool delta_gamma = Overlap(GaussDeltaGamma(static_cast<int>(n), p.hermite_invariant), p.density);
    const bool ok = density_ok && p.kissing == e.kissing && m.gamma_power == e.gamma_power && delta_gamma;
    return Row{e.preset, Str(static_cast<std::int64_t>(n)), Str(p.min_norm2),
               Str(static_cast<std::int64_t>(p.kissing)), Lo(p.density), Hi(p.density),
               Verdict(density_ok), Str(m.gamma_power), Verdict(delta_gamma), Verdict(ok)};
  });
  Finish(report, true);
  return report;
}

Report HermiteSuite(const SuiteContext& ctx) {
  const auto instances = static_cast<std::size_t>(ctx.Param("instances", 100));
  Report report;
  report.columns = {"case", "n", "det", "min", "witness", "blichfeldt_lo", "blichfeldt_hi",
                    "minkowski_lo", "minkowski_hi", "min_vs_blichfeldt", "blichfeldt_vs_minkowski",
                    "verdict"};
  report.rows = ctx.Rows(instances, report.columns.size(), [&](std::size_t i) {
    Rng rng = ctx.RowRng(i);
    const std::size_t n = 2 + i % 4;
    // A^T A + I with small integer A is positive definite.
    RatMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.Uniform(-2, 2);
    }
    RatMatrix g = a.Transpose() * a;
    for (std::size_t r = 0; r < n; ++r) g(r, r) += 1;
    const QuadraticForm q(g);
    const FormMinimum m = FormFirstMinimum(q, ctx.options());
    const HermiteBounds bounds = HermiteBoundsFor(static_cast<int>(n));
    const Real root = Real::Pow(Real(q.determinant()), Frac(1, static_cast<long>(n)));
    const Real blichfeldt = bounds.blichfeldt * root;
    const Real minkowski = bounds.minkowski * root;
    const std::string first = CompareVerdict(Real(m.min), blichfeldt);
    // blichfeldt / minkowski = (n/2 + 1)^(2/n) / 2, so the comparison is the
    // exact one (n + 2)^2 / 4 against 2^n.
    const Rat lhs = Frac((n + 2) * (n + 2), 4);
    const Rat rhs = Pow(Rat(2), static_cast<long>(n));
    const std::string second = lhs < rhs ? "holds" : lhs == rhs ? "equal" : "fails";
    return Row{Str(static_cast<std::int64_t>(i)), Str(static_cast<std::int64_t>(n)),
               Str(q.determinant()), Str(m.min), VecText(m.witness), Lo(blichfeldt),
               Hi(blichfeldt), Lo(minkowski), Hi(minkowski), first, second,
               Verdict(HoldsOrEqual(first) && HoldsOrEqual(second))};
  });
  // gamma_4 = sqrt 2: the reduced-form scan at diagonal <= 2 attains
  // min^4 / det = 4 = gamma_4^4 = 2^(4 exp2).
  const ReducedFormScan scan = ScanReducedForms(4, 2, ctx.options());
  const auto known = KnownHermite(4);
  const bool d4 = scan.best_gamma_power == 4 && known && known->exp2 * 4 == 2 && known->exp3 == 0;
  report.Note("d4_best_gamma_power", Str(scan.best_gamma_power));
  report.Note("d4_min", Str(scan.min));
  report.Note("d4_det", Str(scan.best_gram.Determinant()));
  report.Note("d4_forms_scanned", Str(static_cast<std::int64_t>(scan.forms)));
  report.Note("d4_attains_known", d4 ? "ok" : "fail");
  Finish(report, d4);
  return report;
}

}  // namespace gon::cli::detail
