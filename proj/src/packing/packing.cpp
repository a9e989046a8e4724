#include "gon/packing.hpp"

#include <algorithm>
#include <functional>

#include "gon/theorems.hpp"

namespace gon {

Real PackingDensity(const Lattice& lattice, const EnumerateOptions& options) {
  const MinimalVectors mv = FindMinimalVectors(lattice, options);
  const int n = static_cast<int>(lattice.dim());
  return Real::Pow(Real(Rat(mv.min_norm2 / 4)), Frac(n, 2)) * UnitBallVolume(n) /
         lattice.det_abs();
}

std::size_t KissingNumber(const Lattice& lattice, const EnumerateOptions& options) {
  return FindMinimalVectors(lattice, options).vectors.size();
}

PackingReport AnalyzePacking(const Lattice& lattice, std::string lattice_id,
                             const EnumerateOptions& options) {
  const MinimalVectors mv = FindMinimalVectors(lattice, options);
  const int n = static_cast<int>(lattice.dim());
  PackingReport out{std::move(lattice_id), mv.min_norm2, mv.vectors.size(), Real(), Real(), ""};
  out.density = Real::Pow(Real(Rat(mv.min_norm2 / 4)), Frac(n, 2)) * UnitBallVolume(n) /
                lattice.det_abs();
  out.hermite_invariant =
      Real(mv.min_norm2) / Real::Pow(Real(lattice.det_squared()), Frac(1, n));
  out.density_verdict = CompareVerdict(out.density, Real(1));
  return out;
}

Real HermiteValue::value() const {
  return Real::Pow(Real(2), exp2) * Real::Pow(Real(3), exp3);
}

std::optional<HermiteValue> KnownHermite(int n) {
  switch (n) {
    case 2:
      return HermiteValue{1, Rat(-1, 2)};  // 2 / sqrt 3
    case 3:
      return HermiteValue{Rat(1, 3), 0};
    case 4:
      return HermiteValue{Rat(1, 2), 0};
    case 5:
      return HermiteValue{Rat(3, 5), 0};  // 8^(1/5)
    default:
      return std::nullopt;
  }
}

HermiteBounds HermiteBoundsFor(int n) {
  if (n < 2 || n > 8) throw Error(ErrorKind::kDomain, "n must lie in 2..8");
  HermiteBounds out{n,
                    Real::Pow(Real(Rat(4, 3)), Frac(n - 1, 2)),
                    Real(4) / Real::Pi() * Real::Pow(GammaHalf(n + 2), Frac(2, n)),
                    Real(2) / Real::Pi() * Real::Pow(GammaHalf(n + 4), Frac(2, n)),
                    KnownHermite(n),
                    ""};
  if (n == 3) {
    out.note =
        "the value 2^(1/8) sometimes printed for gamma_3 lies below the fcc invariant "
        "2^(1/3); 2^(1/3) is reported";
  }
  return out;
}

Real GaussDeltaGamma(int n, const Real& gamma) {
  if (n < 1) throw Error(ErrorKind::kDomain, "n must be positive");
  if (CertifiedCompare(gamma, Real(0)) != Ordering::kGreater) {
    throw Error(ErrorKind::kDomain, "gamma must be positive");
  }
  return Real::Pow(Real::Pi() * gamma / Real(4), Frac(n, 2)) / GammaHalf(n + 2);
}

namespace {

HermiteValue PowValue(const HermiteValue& v, const Rat& e) {
  return {Rat(v.exp2 * e), Rat(v.exp3 * e)};
}

std::string ExactVerdict(const HermiteValue& a, const HermiteValue& b) {
  // Distinct exponent pairs give distinct values: 2 and 3 are
  // multiplicatively independent.
  if (a == b) return "equal";
  return CompareVerdict(a.value(), b.value());
}

}  // namespace

MordellGammaReport MordellGammaCheck(int n) {
  const auto prev = KnownHermite(n - 1);
  const auto cur = KnownHermite(n);
  if (n < 3 || !prev || !cur) {
    throw Error(ErrorKind::kDomain, "known Hermite constants are needed for n - 1 and n");
  }
  MordellGammaReport out{n, *cur, PowValue(*prev, Frac(n - 1, n - 2)),
                         PowValue(*prev, Rat((n - 1) * (n - 2))), "", ""};
  out.corrected_verdict = ExactVerdict(out.lhs, out.corrected_rhs);
  out.literal_verdict = ExactVerdict(out.lhs, out.literal_rhs);
  return out;
}

ReducedFormScan ScanReducedForms(int n, int max_diag, const EnumerateOptions& options) {
  if (n < 2 || n > 8) throw Error(ErrorKind::kDomain, "n must lie in 2..8");
  if (max_diag < 1) throw Error(ErrorKind::kDomain, "max_diag must be positive");
  const auto size = static_cast<std::size_t>(n);
  ReducedFormScan out{RatMatrix(size, size), 0, -1, 0};
  RatMatrix g(size, size);
  // Entries are filled row by row: the diagonal entry, then the entries to
  // its right, whose range depends on it.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
    if (i == size) {
      if (!g.IsPositiveDefinite()) return;
      ++out.forms;
      const MinimalVectors mv = FindMinimalVectors(Lattice::FromGram(g), options);
      const Rat power = Pow(mv.min_norm2, n) / g.Determinant();
      if (power > out.best_gamma_power) {
        out.best_gamma_power = power;
        out.best_gram = g;
        out.min = mv.min_norm2;
      }
      return;
    }
    if (j == i) {
      const long lo = i == 0 ? 1 : g(i - 1, i - 1).get_num().get_si();
      for (long d = lo; d <= max_diag; ++d) {
        g(i, i) = d;
        fill(i, i + 1);
      }
      return;
    }
    if (j == size) return fill(i + 1, i + 1);
    const long half = g(i, i).get_num().get_si() / 2;
    for (long v = -half; v <= half; ++v) {
      g(i, j) = v;
      g(j, i) = v;
      fill(i, j + 1);
    }
  };
  fill(0, 0);
  return out;
}

// --- Voronoi cells ----------------------------------------------------------

namespace {

// Keeps the part of the convex polygon p with a . c <= b.
Polygon Clip(const Polygon& p, const Rat& a0, const Rat& a1, const Rat& b) {
  Polygon out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& u = p[i];
    const Point2& v = p[(i + 1) % p.size()];
    const Rat fu = a0 * u.x + a1 * u.y - b;
    const Rat fv = a0 * v.x + a1 * v.y - b;
    if (fu <= 0) out.push_back(u);
    if ((fu < 0 && fv > 0) || (fu > 0 && fv < 0)) {
      const Rat t = fu / (fu - fv);
      out.push_back({u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)});
    }
  }
  return out;
}

}  // namespace

VoronoiCell2d VoronoiCell(const Lattice& lattice) {
  if (lattice.dim() != 2) throw Error(ErrorKind::kDimension, "Voronoi cells need dimension 2");
  const Reduced2d red = Reduce2d(lattice);
  const RatMatrix& g = red.lattice.gram();
  // Reduced coordinates of the cell satisfy |c_1| <= 2|b_2| / (sqrt 3 |b_1|)
  // and |c_2| <= 2 / sqrt 3.
  const Rat ratio = 4 * g(1, 1) / (3 * g(0, 0));
  const Rat h1 = Rat(ISqrt(Ceil(ratio)) + 2);
  const Rat h2 = 2;
  Polygon cell{{-h1, -h2}, {h1, -h2}, {h1, h2}, {-h1, h2}};
  // Relevant vectors of a reduced planar basis lie among these.
  const std::vector<IntVec> candidates = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                          {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  auto half_plane = [&](const IntVec& v) {
    // |c|^2 <= |c - v|^2  <=>  2 c^T G v <= v^T G v.
    const Rat a0 = 2 * (g(0, 0) * v[0] + g(0, 1) * v[1]);
    const Rat a1 = 2 * (g(1, 0) * v[0] + g(1, 1) * v[1]);
    return std::tuple<Rat, Rat, Rat>{a0, a1, g.QuadraticValue(v)};
  };
  for (const IntVec& v : candidates) {
    const auto [a0, a1, b] = half_plane(v);
    cell = Clip(cell, a0, a1, b);
  }
  cell = ConvexHull(cell);

  VoronoiCell2d out;
  const auto& t = red.transform;
  for (const IntVec& v : candidates) {
    const auto [a0, a1, b] = half_plane(v);
    int on_line = 0;
    for (const Point2& p : cell) on_line += a0 * p.x + a1 * p.y == b;
    if (on_line >= 2) {
      out.relevant.push_back({t[0][0] * v[0] + t[0][1] * v[1], t[1][0] * v[0] + t[1][1] * v[1]});
    }
  }
  out.coefficient_coordinates = !lattice.has_basis();
  Polygon mapped;
  for (const Point2& p : cell) {
    if (lattice.has_basis()) {
      const RatMatrix& b = red.lattice.basis();
      mapped.push_back({b(0, 0) * p.x + b(0, 1) * p.y, b(1, 0) * p.x + b(1, 1) * p.y});
    } else {
      mapped.push_back({t[0][0] * p.x + t[0][1] * p.y, t[1][0] * p.x + t[1][1] * p.y});
    }
  }
  out.cell = ConvexHull(mapped);
  out.coefficient_area = SignedArea(out.cell);
  out.area = lattice.has_basis()
                 ? Real(out.coefficient_area)
                 : Real(out.coefficient_area) * Real::Sqrt(Real(lattice.det_squared()));
  return out;
}

// --- Critical determinants ----------------------------------------------------

Rat CriticalDeterminantSquared2d(const ConvexBody& body) {
  if (body.dim() != 2) throw Error(ErrorKind::kDimension, "planar body required");
  // Disc: hexagonal-critical, Δ = (sqrt 3 / 2) area / pi. Parallelogram
  // |A x|_inf <= 1: Δ = area / 4. Both are invariant under linear maps.
  return std::visit(
      [](const auto& s) -> Rat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return Rat(3 * s.level * s.level / (4 * s.q.Determinant()));
        } else if constexpr (std::is_same_v<T, AxisBox>) {
          return Rat(s.halfwidths[0] * s.halfwidths[0] * s.halfwidths[1] * s.halfwidths[1]);
        } else if constexpr (std::is_same_v<T, FormsBox>) {
          const Rat det = s.a.Determinant();
          if (s.a.rows() != 2 || det == 0) {
            throw Error(ErrorKind::kUnsupported, "critical determinant needs a bounded body");
          }
          const Rat area = s.lambda[0] * s.lambda[1] / Abs(det);
          return Rat(area * area);
        } else {
          throw Error(ErrorKind::kUnsupported,
                      "no built-in critical determinant for this body class");
        }
      },
      body.shape());
}

CriticalDetCheck CriticalDetCheck2d(const ConvexBody& body, const Lattice& lattice,
                                    const EnumerateOptions& options) {
  if (lattice.dim() != 2) throw Error(ErrorKind::kDimension, "planar lattice required");
  CriticalDetCheck out{{}, CriticalDeterminantSquared2d(body), Real(), lattice.det_abs(), ""};
  out.minima = ComputeSuccessiveMinima(lattice, body, options);
  const Rat lhs2 =
      out.minima.lambda_squared[0] * out.minima.lambda_squared[1] * out.critical_squared;
  out.lhs = Real::Sqrt(Real(lhs2));
  const Rat& det2 = lattice.det_squared();
  out.verdict = lhs2 < det2 ? "holds" : lhs2 == det2 ? "equal" : "fails";
  return out;
}

HlawkaCheck HlawkaWitnessCheck(const ConvexBody& body, const Lattice& witness,
                               const EnumerateOptions& options) {
  if (body.dim() != witness.dim()) {
    throw Error(ErrorKind::kDimension, "body and lattice dimensions differ");
  }
  for (const BodyPoint& p : PointsInBody(witness, body, 1, options)) {
    const bool zero = std::all_of(p.point.coeffs.begin(), p.point.coeffs.end(),
                                  [](std::int64_t c) { return c == 0; });
    if (!zero && p.gauge2 < 1) {
      throw Error(ErrorKind::kInadmissible, "a nonzero lattice point lies inside the body");
    }
  }
  const unsigned n = static_cast<unsigned>(witness.dim());
  HlawkaCheck out{witness.det_abs(), body.Volume() / (Real(2) * Real::Zeta(n)), Real(), ""};
  out.gap = out.bound - out.det;
  out.verdict = CompareVerdict(out.det, out.bound);
  return out;
}

}  // namespace gon
