#include <algorithm>
#include <map>
#include <utility>

#include "gon/theorems.hpp"

namespace gon {

std::string CompareVerdict(const Real& a, const Real& b) {
  if (a.exact() && b.exact()) {
    if (*a.exact() < *b.exact()) return "holds";
    if (*a.exact() == *b.exact()) return "equal";
    return "fails";
  }
  switch (CertifiedCompare(a, b)) {
    case Ordering::kLess:
      return "holds";
    case Ordering::kGreater:
      return "fails";
    case Ordering::kUndecided:
      break;
  }
  return "undecided";
}

namespace {

RatVec Coords(const LatticePoint& p) {
  return p.ambient.empty() ? ToRat(p.coeffs) : p.ambient;
}

bool IsPositive(const RatVec& x) {
  for (const Rat& c : x) {
    if (c != 0) return c > 0;
  }
  return false;
}

LatticePoint Negate(const Lattice& lattice, const IntVec& m) {
  IntVec neg = m;
  for (auto& c : neg) c = -c;
  return lattice.Point(neg);
}

// Smallest gauge first, then shortest; of +-x the positive representative;
// then larger coordinates first.
const BodyPoint* Preferred(const std::vector<const BodyPoint*>& pts) {
  const BodyPoint* best = nullptr;
  Rat best_norm;
  for (const BodyPoint* p : pts) {
    const RatVec c = Coords(p->point);
    if (!IsPositive(c)) continue;
    const Rat norm = Dot(c, c);
    if (best == nullptr || p->gauge2 < best->gauge2 ||
        (p->gauge2 == best->gauge2 &&
         (norm < best_norm || (norm == best_norm && Coords(best->point) < c)))) {
      best = p;
      best_norm = norm;
    }
  }
  return best;
}

Real TwoPowTimesDet(const Lattice& lattice) {
  return Real(Pow(Rat(2), static_cast<long>(lattice.dim()))) * lattice.det_abs();
}

std::string GaugeClaim(const Rat& g, bool strict) {
  return "gauge^2 = " + ToString(g) + (strict ? " < 1" : " <= 1");
}

}  // namespace

MinkowskiResult MinkowskiPoint(const Lattice& lattice, const ConvexBody& body,
                               MinkowskiMode mode, const EnumerateOptions& options) {
  const bool strict = mode == MinkowskiMode::kStrict;
  if (body.dim() != lattice.dim()) {
    throw Error(ErrorKind::kDimension, "body and lattice dimensions differ");
  }
  TheoremCertificate cert;
  cert.statement = strict ? "minkowski-strict" : "minkowski-closed";
  const std::string verdict = CompareVerdict(TwoPowTimesDet(lattice), body.Volume());
  cert.hypotheses.push_back({"2^n det < vol(C)", verdict});
  const bool ok = verdict == "holds" || (!strict && verdict == "equal");
  if (!ok) {
    throw Error(ErrorKind::kHypothesis,
                std::string("volume condition not certified: ") + verdict);
  }
  const std::vector<BodyPoint> pts = PointsInBody(lattice, body, 1, options);
  std::vector<const BodyPoint*> eligible;
  for (const BodyPoint& p : pts) {
    if (!strict || p.gauge2 < 1) eligible.push_back(&p);
  }
  const BodyPoint* best = Preferred(eligible);
  if (best == nullptr) {
    throw Error(ErrorKind::kNotFound, "no lattice point found despite the volume bound");
  }
  const Rat g = CoefficientBody(lattice, body).GaugeSquared(best->point.coeffs);
  cert.witnesses.push_back(best->point);
  cert.verification.push_back({GaugeClaim(g, strict), (strict ? g < 1 : g <= 1) ? "holds" : "fails"});
  return {best->point, std::move(cert)};
}

MordellResult MordellGridSearch(const Lattice& lattice, const ConvexBody& body,
                                const EnumerateOptions& options) {
  if (body.dim() != lattice.dim()) {
    throw Error(ErrorKind::kDimension, "body and lattice dimensions differ");
  }
  const std::size_t n = lattice.dim();
  MordellResult result;
  TheoremCertificate& cert = result.certificate;
  cert.statement = "mordell-grid";
  const std::string verdict = CompareVerdict(TwoPowTimesDet(lattice), body.Volume());
  cert.hypotheses.push_back({"2^n det < vol(C)", verdict});
  if (verdict != "holds") {
    throw Error(ErrorKind::kHypothesis,
                std::string("volume condition not certified: ") + verdict);
  }
  const CoefficientBody coeff(lattice, body);
  for (std::int64_t t = 1; t <= kMordellMaxT; t *= 2) {
    // (2/t) z lies in C iff gauge^2(z) <= t^2 / 4.
    const Rat bound = Frac(Int(static_cast<long>(t)) * t, 4);
    std::vector<IntVec> grid{IntVec(n, 0)};
    for (BodyPoint& p : PointsInBody(lattice, body, bound, options)) {
      grid.push_back(std::move(p.point.coeffs));
    }
    result.trace.push_back({t, grid.size()});
    if (Int(std::to_string(grid.size()), 10) <= Pow(Int(static_cast<long>(t)), n)) continue;
    std::map<IntVec, std::vector<const IntVec*>> classes;
    for (const IntVec& z : grid) {
      IntVec r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = ((z[i] % t) + t) % t;
      classes[r].push_back(&z);
    }
    for (const auto& [residue, members] : classes) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          IntVec m(n);
          for (std::size_t k = 0; k < n; ++k) m[k] = ((*members[i])[k] - (*members[j])[k]) / t;
          const Rat g = coeff.GaugeSquared(m);
          if (g >= 1) continue;
          result.point = lattice.Point(m);
          if (!IsPositive(Coords(result.point))) result.point = Negate(lattice, m);
          cert.witnesses.push_back(result.point);
          cert.verification.push_back(
              {"N(" + std::to_string(t) + ") = " + std::to_string(grid.size()) + " > t^n",
               "holds"});
          cert.verification.push_back({GaugeClaim(g, true), "holds"});
          return result;
        }
      }
    }
  }
  throw Error(ErrorKind::kBudget, "grid refinement cap reached");
}

// --- Blichfeldt -------------------------------------------------------------

Rat BoxUnionVolume(const BoxUnion& region) {
  if (region.boxes.empty()) return 0;
  const std::size_t n = region.boxes.front().lo.size();
  std::vector<std::vector<Rat>> cuts(n);
  for (const HalfOpenBox& b : region.boxes) {
    if (b.lo.size() != n || b.hi.size() != n) {
      throw Error(ErrorKind::kDimension, "boxes of mixed dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
      cuts[i].push_back(b.lo[i]);
      cuts[i].push_back(b.hi[i]);
    }
  }
  for (auto& c : cuts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  // Elementary cells of the coordinate grid lie wholly inside or outside.
  Rat total = 0;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) empty |= idx[i] + 1 >= cuts[i].size();
    if (empty) break;
    RatVec corner(n);
    Rat cell = 1;
    for (std::size_t i = 0; i < n; ++i) {
      corner[i] = cuts[i][idx[i]];
      cell *= cuts[i][idx[i] + 1] - cuts[i][idx[i]];
    }
    if (Contains(BlichfeldtRegion(region), corner)) total += cell;
    std::size_t k = 0;
    while (k < n && ++idx[k] + 1 >= cuts[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
  return total;
}

bool Contains(const BlichfeldtRegion& region, const RatVec& x) {
  if (const auto* body = std::get_if<ConvexBody>(&region)) {
    return body->Classify(x) != Membership::kOutside;
  }
  for (const HalfOpenBox& b : std::get<BoxUnion>(region).boxes) {
    if (b.lo.size() != x.size()) throw Error(ErrorKind::kDimension, "point dimension");
    bool in = true;
    for (std::size_t i = 0; i < x.size() && in; ++i) in = b.lo[i] <= x[i] && x[i] < b.hi[i];
    if (in) return true;
  }
  return false;
}

namespace {

// Ambient bounding box [lo, hi] of the region.
std::pair<RatVec, RatVec> BoundingBox(const BlichfeldtRegion& region, std::size_t n) {
  RatVec lo(n), hi(n);
  if (const auto* body = std::get_if<ConvexBody>(&region)) {
    // {x^T F x <= 1} has |x_i| <= sqrt((F^-1)_ii).
    const RatMatrix inv = body->BoundingForm().Inverse();
    for (std::size_t i = 0; i < n; ++i) {
      hi[i] = Rat(ISqrt(Ceil(inv(i, i))) + 1);
      lo[i] = -hi[i];
    }
    return {lo, hi};
  }
  const auto& boxes = std::get<BoxUnion>(region).boxes;
  if (boxes.empty()) throw Error(ErrorKind::kDomain, "empty region");
  lo = boxes.front().lo;
  hi = boxes.front().hi;
  for (const HalfOpenBox& b : boxes) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], b.lo[i]);
      hi[i] = std::max(hi[i], b.hi[i]);
    }
  }
  return {lo, hi};
}

std::size_t RegionDim(const BlichfeldtRegion& region) {
  if (const auto* body = std::get_if<ConvexBody>(&region)) return body->dim();
  const auto& boxes = std::get<BoxUnion>(region).boxes;
  if (boxes.empty()) throw Error(ErrorKind::kDomain, "empty region");
  return boxes.front().lo.size();
}

}  // namespace

BlichfeldtResult BlichfeldtPoints(const Lattice& lattice, const BlichfeldtRegion& region,
                                  int m, const EnumerateOptions& options) {
  if (m < 1) throw Error(ErrorKind::kDomain, "m must be at least 1");
  const std::size_t n = lattice.dim();
  if (RegionDim(region) != n) {
    throw Error(ErrorKind::kDimension, "region and lattice dimensions differ");
  }
  const RatMatrix& basis = lattice.basis();
  BlichfeldtResult result;
  TheoremCertificate& cert = result.certificate;
  cert.statement = "blichfeldt";
  const Real volume = std::holds_alternative<ConvexBody>(region)
                          ? std::get<ConvexBody>(region).Volume()
                          : Real(BoxUnionVolume(std::get<BoxUnion>(region)));
  const std::string verdict = CompareVerdict(Real(m) * lattice.det_abs(), volume);
  cert.hypotheses.push_back({"m det < vol(region)", verdict});
  if (verdict != "holds") {
    throw Error(ErrorKind::kHypothesis,
                std::string("volume condition not certified: ") + verdict);
  }
  // Coefficient range of the region by interval evaluation of B^-1 x.
  const RatMatrix inv = basis.Inverse();
  const auto [lo, hi] = BoundingBox(region, n);
  std::vector<std::int64_t> zlo(n), zhi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat cmin = 0, cmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat a = inv(i, j) * lo[j];
      const Rat b = inv(i, j) * hi[j];
      cmin += std::min(a, b);
      cmax += std::max(a, b);
    }
    zlo[i] = ToInt64(Floor(cmin)) - 1;
    zhi[i] = ToInt64(Ceil(cmax));
  }
  Int translates = 1;
  for (std::size_t i = 0; i < n; ++i) translates *= Int(static_cast<long>(zhi[i] - zlo[i] + 1));

  std::uint64_t work = 0;
  for (long level = 1;; ++level) {
    const std::int64_t cells = std::int64_t{1} << level;
    Int cost = translates * Pow(Int(static_cast<long>(cells)), n);
    if (cost > Int(std::to_string(options.max_points), 10) ||
        work > options.max_points) {
      throw Error(ErrorKind::kBudget, "subdivision exceeds the work budget");
    }
    const Rat size = Frac(1, cells);
    std::vector<std::int64_t> corner(n, 0);
    for (;;) {
      if (options.stop.stop_requested()) throw Error(ErrorKind::kBudget, "cancelled");
      RatVec c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = Rat(static_cast<long>(corner[i])) * size;
      std::vector<RatVec> hits;
      IntVec z(zlo.begin(), zlo.end());
      for (;;) {
        ++work;
        RatVec coeff(n);
        for (std::size_t i = 0; i < n; ++i) coeff[i] = c[i] + Rat(static_cast<long>(z[i]));
        RatVec x = basis * coeff;
        if (Contains(region, x)) {
          hits.push_back(std::move(x));
          if (hits.size() == static_cast<std::size_t>(m) + 1) break;
        }
        std::size_t k = 0;
        while (k < n && z[k] == zhi[k]) z[k] = zlo[k], ++k;
        if (k == n) break;
        ++z[k];
      }
      if (hits.size() == static_cast<std::size_t>(m) + 1) {
        result.points = std::move(hits);
        result.cell_size = size;
        for (std::size_t i = 0; i < result.points.size(); ++i) {
          const bool in = Contains(region, result.points[i]);
          cert.verification.push_back({"point " + std::to_string(i) + " in region",
                                       in ? "holds" : "fails"});
          for (std::size_t j = i + 1; j < result.points.size(); ++j) {
            RatVec diff(n);
            for (std::size_t k = 0; k < n; ++k) diff[k] = result.points[i][k] - result.points[j][k];
            const RatVec dc = inv * diff;
            const bool integral = std::all_of(dc.begin(), dc.end(), [](const Rat& v) {
              return v.get_den() == 1;
            });
            cert.verification.push_back(
                {"difference " + std::to_string(i) + "-" + std::to_string(j) + " in lattice",
                 integral && dc != RatVec(n, 0) ? "holds" : "fails"});
          }
        }
        return result;
      }
      std::size_t k = 0;
      while (k < n && corner[k] == cells - 1) corner[k++] = 0;
      if (k == n) break;
      ++corner[k];
    }
  }
}

// --- Linear forms ---------------------------------------------------------

LinearFormsResult LinearFormsSolve(const RatMatrix& a, const RatVec& lambda,
                                   const EnumerateOptions& options) {
  if (!a.square() || a.rows() != lambda.size() || lambda.empty()) {
    throw Error(ErrorKind::kDimension, "need n forms in n variables");
  }
  for (const Rat& l : lambda) {
    if (l <= 0) throw Error(ErrorKind::kDomain, "bounds must be positive");
  }
  const std::size_t n = lambda.size();
  LinearFormsResult result;
  TheoremCertificate& cert = result.certificate;
  cert.statement = "linear-forms";
  const Rat det = Abs(a.Determinant());
  Rat prod = 1;
  for (const Rat& l : lambda) prod *= l;
  cert.hypotheses.push_back({"det A != 0", det != 0 ? "holds" : "fails"});
  cert.hypotheses.push_back({"|det A| <= prod lambda",
                             det < prod ? "holds" : (det == prod ? "equal" : "fails")});
  if (det == 0 || prod < det) {
    throw Error(ErrorKind::kHypothesis, "need prod lambda >= |det A| > 0");
  }
  if (n == 1) {
    result.x = {1};
  } else {
    const Lattice zn = Lattice::FromBasis(RatMatrix::Identity(n));
    const std::vector<BodyPoint> pts =
        PointsInBody(zn, ConvexBody::Forms(a, lambda), 1, options);
    std::vector<const BodyPoint*> all;
    for (const BodyPoint& p : pts) all.push_back(&p);
    const BodyPoint* best = Preferred(all);
    if (best == nullptr) throw Error(ErrorKind::kNotFound, "no admissible vector found");
    result.x = best->point.coeffs;
  }
  const RatVec y = a * result.x;
  for (std::size_t j = 0; j < n; ++j) {
    cert.verification.push_back(
        {"|Y_" + std::to_string(j + 1) + "(x)| = " + ToString(Abs(y[j])) +
             " <= " + ToString(lambda[j]),
         Abs(y[j]) <= lambda[j] ? "holds" : "fails"});
  }
  if (n >= kMinLatticeDim) {
    cert.witnesses.push_back(Lattice::FromBasis(RatMatrix::Identity(n)).Point(result.x));
  }
  return result;
}

ComplexLinearFormsResult ComplexLinearFormsSolve(const std::vector<RatVec>& reals,
                                                 const std::vector<ComplexFormPair>& pairs,
                                                 const EnumerateOptions& options) {
  const std::size_t s = pairs.size();
  const std::size_t n = reals.size() + 2 * s;
  if (n == 0) throw Error(ErrorKind::kDimension, "no forms given");
  RatMatrix m(n, n);
  std::size_t row = 0;
  auto put = [&](const RatVec& v) {
    if (v.size() != n) throw Error(ErrorKind::kDimension, "form has wrong length");
    for (std::size_t j = 0; j < n; ++j) m(row, j) = v[j];
    ++row;
  };
  for (const RatVec& r : reals) put(r);
  for (const ComplexFormPair& p : pairs) {
    put(p.re);
    put(p.im);
  }
  ComplexLinearFormsResult result;
  TheoremCertificate& cert = result.certificate;
  cert.statement = "complex-linear-forms";
  // Rows Y, conj(Y) transform to Re Y, Im Y with determinant factor -2i.
  const Rat det_real = m.Determinant();
  result.det_abs_squared = Pow(Rat(4), static_cast<long>(s)) * det_real * det_real;
  cert.hypotheses.push_back({"det != 0", det_real != 0 ? "holds" : "fails"});
  if (det_real == 0) throw Error(ErrorKind::kHypothesis, "singular system of forms");

  const Rat sn = Frac(Int(static_cast<long>(s)), Int(static_cast<long>(n)));
  const Real two_over_pi = Real(2) / Real::Pi();
  result.bound = Real::Pow(two_over_pi, sn) *
                 Real::Pow(Real(result.det_abs_squared), Frac(1, Int(static_cast<long>(2 * n))));
  const Real bound2 = Real::Pow(two_over_pi, 2 * sn) *
                      Real::Pow(Real(result.det_abs_squared), Frac(1, Int(static_cast<long>(n))));
  // sum_j |Y_j|^2 = x^T G x with G = sum L^T L over real forms plus
  // 2 (R^T R + I^T I) over pairs.
  RatMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Rat w = r < reals.size() ? Rat(1) : Rat(2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) += w * m(r, i) * m(r, j);
    }
  }
  const Rat b2_hi = bound2.Eval(64).hi();
  std::vector<IntVec> candidates =
      EnumerateForm(g, Rat(static_cast<long>(n)) * b2_hi, options);
  // Per-form squared moduli of x.
  auto moduli = [&](const IntVec& x) {
    const RatVec y = m * x;
    RatVec out;
    for (std::size_t r = 0; r < reals.size(); ++r) out.push_back(y[r] * y[r]);
    for (std::size_t k = 0; k < s; ++k) {
      const Rat& re = y[reals.size() + 2 * k];
      const Rat& im = y[reals.size() + 2 * k + 1];
      out.push_back(re * re + im * im);
    }
    return out;
  };
  std::vector<std::pair<Rat, IntVec>> ranked;
  for (IntVec& x : candidates) {
    if (!IsPositive(ToRat(x))) continue;
    const RatVec mod = moduli(x);
    ranked.emplace_back(*std::max_element(mod.begin(), mod.end()), std::move(x));
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return b.second < a.second;
  });
  for (const auto& [worst, x] : ranked) {
    if (CertifiedLessEqual(Real(worst), bound2) != true) continue;
    result.x = x;
    const RatVec mod = moduli(x);
    for (std::size_t j = 0; j < mod.size(); ++j) {
      cert.verification.push_back({"|Y_" + std::to_string(j + 1) + "(x)|^2 = " +
                                       ToString(mod[j]) + " <= bound^2",
                                   CertifiedLessEqual(Real(mod[j]), bound2) == true
                                       ? "holds"
                                       : "undecided"});
    }
    return result;
  }
  throw Error(ErrorKind::kNotFound, "no vector certified within the bound");
}

// --- Successive minima relations ---------------------------------------

SecondTheoremCheck CheckSecondTheorem(const Lattice& lattice, const ConvexBody& body,
                                      const EnumerateOptions& options) {
  const std::size_t n = lattice.dim();
  SecondTheoremCheck out{ComputeSuccessiveMinima(lattice, body, options), Real(0), 0, 0,
                         "", ""};
  out.upper = Pow(Rat(2), static_cast<long>(n));
  Rat fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
  out.lower = out.upper / fact;
  const Real vol = body.Volume();
  out.product = vol / lattice.det_abs();
  for (const Real& l : out.minima.lambda) out.product = out.product * l;
  if (const auto v = vol.exact()) {
    // The square of the product is rational.
    Rat sq = *v * *v / lattice.det_squared();
    for (const Rat& l2 : out.minima.lambda_squared) sq *= l2;
    out.lower_verdict = CompareVerdict(Real(out.lower * out.lower), Real(sq));
    out.upper_verdict = CompareVerdict(Real(sq), Real(out.upper * out.upper));
  } else {
    out.lower_verdict = CompareVerdict(Real(out.lower), out.product);
    out.upper_verdict = CompareVerdict(out.product, Real(out.upper));
  }
  return out;
}

RealEnclosure OverlapDilation(const Lattice& lattice, const ConvexBody& body,
                              const Rat& tolerance, const EnumerateOptions& options) {
  if (tolerance <= 0) throw Error(ErrorKind::kDomain, "tolerance must be positive");
  if (!body.bounded()) throw Error(ErrorKind::kUnbounded, "body is unbounded");
  const std::size_t n = lattice.dim();
  IntVec e(n, 0);
  e[0] = 1;
  const Rat g = CoefficientBody(lattice, body).GaugeSquared(e);
  // lambda C and lambda C + z meet iff z lies in 2 lambda C.
  auto overlaps = [&](const Rat& l) {
    return !PointsInBody(lattice, body, 4 * l * l, options).empty();
  };
  Rat lo = 0;
  Rat hi = (g + 1) / 4;  // >= sqrt(g) / 2
  while (hi - lo > tolerance * hi) {
    const Rat mid = (lo + hi) / 2;
    if (overlaps(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return RealEnclosure(lo, hi);
}

}  // namespace gon
