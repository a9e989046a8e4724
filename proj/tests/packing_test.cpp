#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gon/packing.hpp"
#include "gon/theorems.hpp"

namespace gon {
namespace {

template <typename F>
std::string ErrorCodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.code());
  }
  return "none";
}

const RatMatrix kHexGram{{1, Rat(1, 2)}, {Rat(1, 2), 1}};
// X^2 + Y^2 + Z^2 + XY + YZ + XZ.
const RatMatrix kFccGram{{1, Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), 1, Rat(1, 2)},
                         {Rat(1, 2), Rat(1, 2), 1}};

Lattice Zn(std::size_t n) { return Lattice::FromBasis(RatMatrix::Identity(n)); }

double Mid(const Real& x) {
  const RealEnclosure e = x.Eval(80);
  return Rat((e.lo() + e.hi()) / 2).get_d();
}

bool Overlap(const Real& a, const Real& b) {
  const RealEnclosure x = a.Eval(80);
  const RealEnclosure y = b.Eval(80);
  return x.lo() <= y.hi() && y.lo() <= x.hi();
}

// Random positive definite Gram A^T A + I with small integer A.
RatMatrix RandomGram(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  }
  RatMatrix g = a.Transpose() * a;
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
  return g;
}

Lattice RandomLattice2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  for (;;) {
    RatMatrix b{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    if (b.Determinant() != 0) return Lattice::FromBasis(b);
  }
}

// --- Density and kissing ------------------------------------------------------

TEST(PackingTest, Densities) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(Mid(PackingDensity(Zn(2))), pi / 4, 1e-15);
  const auto hex = AnalyzePacking(Lattice::FromGram(kHexGram), "hexagonal");
  EXPECT_NEAR(Mid(hex.density), pi / (2 * std::sqrt(3.0)), 1e-15);
  EXPECT_EQ(std::floor(Mid(hex.density) * 10000), 9068);  // 90.69 percent
  const auto fcc = AnalyzePacking(Lattice::FromGram(kFccGram), "fcc");
  EXPECT_NEAR(Mid(fcc.density), pi / (3 * std::sqrt(2.0)), 1e-15);
  EXPECT_EQ(std::floor(Mid(fcc.density) * 10000), 7404);
  EXPECT_EQ(hex.density_verdict, "holds");
  EXPECT_EQ(hex.lattice_id, "hexagonal");
}

TEST(PackingTest, KissingNumbers) {
  EXPECT_EQ(KissingNumber(Lattice::FromGram(kHexGram)), 6u);
  EXPECT_EQ(KissingNumber(Lattice::FromGram(kFccGram)), 12u);
  EXPECT_EQ(KissingNumber(Zn(4)), 8u);
  EXPECT_EQ(KissingNumber(Zn(2)), 4u);
}

TEST(PackingTest, KissingIsTwiceThePositiveHalf) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Lattice l = Lattice::FromGram(RandomGram(rng, 2 + trial % 4));
    const MinimalVectors mv = FindMinimalVectors(l);
    std::size_t positive = 0;
    for (const auto& p : mv.vectors) {
      const auto first = std::find_if(p.coeffs.begin(), p.coeffs.end(),
                                      [](std::int64_t c) { return c != 0; });
      positive += *first > 0;
    }
    EXPECT_EQ(mv.vectors.size() % 2, 0u);
    EXPECT_EQ(KissingNumber(l), 2 * positive);
  }
}

TEST(PackingTest, DensityMatchesDeltaGamma) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto report = AnalyzePacking(Lattice::FromGram(RandomGram(rng, n)));
    const Real delta = GaussDeltaGamma(static_cast<int>(n), report.hermite_invariant);
    EXPECT_TRUE(Overlap(report.density, delta)) << trial;
    EXPECT_EQ(report.density_verdict, "holds");
  }
}

TEST(PackingTest, InvariantBelowBlichfeldtBound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const auto report = AnalyzePacking(Lattice::FromGram(RandomGram(rng, n)));
    const HermiteBounds b = HermiteBoundsFor(n);
    EXPECT_EQ(CertifiedLessEqual(report.hermite_invariant, b.blichfeldt), true) << trial;
    EXPECT_EQ(CertifiedLessEqual(report.hermite_invariant, b.minkowski), true) << trial;
  }
}

// --- Hermite constants ----------------------------------------------------------

TEST(HermiteTest, Bounds) {
  const auto two = HermiteBoundsFor(2);
  EXPECT_EQ(CertifiedLessEqual(two.known->value(), two.blichfeldt), true);
  EXPECT_NEAR(Mid(two.known->value()), 2 / std::sqrt(3.0), 1e-15);
  // n = 2: Hermite's bound is attained.
  EXPECT_NEAR(Mid(two.hermite), 2 / std::sqrt(3.0), 1e-15);

  const auto four = HermiteBoundsFor(4);
  for (const Real& bound : {four.hermite, four.minkowski, four.blichfeldt}) {
    EXPECT_EQ(CertifiedLessEqual(four.known->value(), bound), true);
  }
  EXPECT_NEAR(Mid(four.known->value()), std::sqrt(2.0), 1e-15);

  const auto five = HermiteBoundsFor(5);
  EXPECT_EQ(CertifiedLessEqual(five.known->value(), five.blichfeldt), true);
  EXPECT_NEAR(Mid(five.known->value()), std::pow(8.0, 0.2), 1e-15);

  const auto three = HermiteBoundsFor(3);
  EXPECT_FALSE(three.note.empty());
  // The fcc invariant is the tabulated gamma_3, and exceeds 2^(1/8).
  const auto fcc = AnalyzePacking(Lattice::FromGram(kFccGram));
  EXPECT_TRUE(Overlap(fcc.hermite_invariant, three.known->value()));
  EXPECT_EQ(CompareVerdict(Real::Pow(Real(2), Rat(1, 8)), fcc.hermite_invariant), "holds");

  EXPECT_FALSE(HermiteBoundsFor(8).known);
  EXPECT_EQ(ErrorCodeOf([] { HermiteBoundsFor(1); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { HermiteBoundsFor(9); }), "domain");
  EXPECT_EQ(kHermite24, 4);
}

TEST(HermiteTest, BoundsAgainstFloatingFormulas) {
  for (int n = 2; n <= 8; ++n) {
    const auto b = HermiteBoundsFor(n);
    const double g1 = std::tgamma(n / 2.0 + 1), g2 = std::tgamma(n / 2.0 + 2);
    EXPECT_NEAR(Mid(b.hermite), std::pow(4.0 / 3, (n - 1) / 2.0), 1e-12);
    EXPECT_NEAR(Mid(b.minkowski), 4 / std::numbers::pi * std::pow(g1, 2.0 / n), 1e-12);
    EXPECT_NEAR(Mid(b.blichfeldt), 2 / std::numbers::pi * std::pow(g2, 2.0 / n), 1e-12);
  }
}

TEST(HermiteTest, DeltaGamma) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(Mid(GaussDeltaGamma(2, KnownHermite(2)->value())), pi / (2 * std::sqrt(3.0)),
              1e-15);
  EXPECT_NEAR(Mid(GaussDeltaGamma(3, KnownHermite(3)->value())), pi / (3 * std::sqrt(2.0)),
              1e-15);
  EXPECT_NEAR(Mid(GaussDeltaGamma(1, Real(1))), 1, 1e-15);
  EXPECT_EQ(ErrorCodeOf([] { GaussDeltaGamma(2, Real(0)); }), "domain");
}

TEST(HermiteTest, Mordell) {
  const auto four = MordellGammaCheck(4);
  EXPECT_EQ(four.corrected_verdict, "equal");
  EXPECT_EQ(four.literal_verdict, "holds");
  const auto three = MordellGammaCheck(3);
  EXPECT_EQ(three.corrected_verdict, "holds");
  EXPECT_EQ(three.corrected_rhs, (HermiteValue{2, -1}));  // 4/3
  EXPECT_EQ(three.literal_verdict, "holds");
  const auto five = MordellGammaCheck(5);
  EXPECT_EQ(five.corrected_verdict, "holds");
  EXPECT_EQ(five.literal_verdict, "holds");
  EXPECT_EQ(ErrorCodeOf([] { MordellGammaCheck(6); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { MordellGammaCheck(2); }), "domain");
}

TEST(HermiteTest, ReducedFormScanAttainsGamma4) {
  const auto scan = ScanReducedForms(4, 2);
  EXPECT_EQ(scan.best_gamma_power, 4);  // gamma_4^4 = sqrt(2)^4
  EXPECT_EQ(scan.min, 2);
  EXPECT_EQ(scan.best_gram.Determinant(), 4);
  EXPECT_EQ(KissingNumber(Lattice::FromGram(scan.best_gram)), 24u);  // D4
  // n = 2: the hexagonal form wins with gamma^2 = 4/3.
  const auto two = ScanReducedForms(2, 3);
  EXPECT_EQ(two.best_gamma_power, Rat(4, 3));
  EXPECT_EQ(ErrorCodeOf([] { ScanReducedForms(4, 0); }), "domain");
}

// --- Voronoi cells ----------------------------------------------------------------

// Whether the origin is a closest lattice point to x, by brute force.
bool OriginClosest(const Lattice& l, const RatVec& x) {
  const Rat own = l.gram().QuadraticValue(x);
  for (std::int64_t a = -12; a <= 12; ++a) {
    for (std::int64_t b = -12; b <= 12; ++b) {
      const RatVec d{x[0] - a, x[1] - b};
      if (l.gram().QuadraticValue(d) < own) return false;
    }
  }
  return true;
}

TEST(VoronoiTest, Examples) {
  const auto square = VoronoiCell(Zn(2));
  EXPECT_EQ(square.cell.size(), 4u);
  EXPECT_EQ(square.coefficient_area, 1);
  for (const Point2& p : square.cell) {
    EXPECT_EQ(Abs(p.x), Rat(1, 2));
    EXPECT_EQ(Abs(p.y), Rat(1, 2));
  }
  EXPECT_EQ(square.relevant.size(), 4u);

  const auto hex = VoronoiCell(Lattice::FromGram(kHexGram));
  EXPECT_TRUE(hex.coefficient_coordinates);
  EXPECT_EQ(hex.cell.size(), 6u);
  EXPECT_EQ(hex.relevant.size(), 6u);
  EXPECT_TRUE(Overlap(hex.area, Real::Sqrt(Real(Rat(3, 4)))));

  const auto skew = VoronoiCell(Lattice::FromBasis(RatMatrix{{2, 1}, {0, 1}}));
  EXPECT_EQ(skew.coefficient_area, 2);
  EXPECT_EQ(ErrorCodeOf([] { VoronoiCell(Zn(3)); }), "dimension");
}

TEST(VoronoiTest, AreaEqualsDeterminantAndCellIsNearestRegion) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const Lattice l = trial % 2 ? RandomLattice2(rng) : Lattice::FromGram(RandomGram(rng, 2));
    const auto v = VoronoiCell(l);
    if (l.has_basis()) {
      EXPECT_EQ(v.coefficient_area * v.coefficient_area, l.det_squared());
    } else {
      // Coefficient area of a cell is 1 for every lattice.
      EXPECT_EQ(v.coefficient_area, 1);
    }
    // Random coefficient points: inside the cell exactly when the origin is
    // nearest.
    const RatMatrix inv = l.has_basis() ? l.basis().Inverse() : RatMatrix::Identity(2);
    for (int s = 0; s < 30; ++s) {
      const RatVec c{Rat(num(rng), 40), Rat(num(rng), 40)};
      const RatVec cell_coords = l.has_basis() ? l.basis() * c : c;
      bool inside = true, boundary = false;
      for (std::size_t i = 0; i < v.cell.size(); ++i) {
        const Rat cr = Cross(v.cell[i], v.cell[(i + 1) % v.cell.size()],
                             {cell_coords[0], cell_coords[1]});
        inside = inside && cr >= 0;
        boundary = boundary || cr == 0;
      }
      if (boundary) continue;
      EXPECT_EQ(inside, OriginClosest(l, inv * cell_coords)) << trial;
    }
  }
}

// --- Critical determinants --------------------------------------------------------

TEST(CriticalDetTest, Examples) {
  const auto disc = CriticalDetCheck2d(ConvexBody::Ball(2), Zn(2));
  EXPECT_EQ(disc.critical_squared, Rat(3, 4));
  EXPECT_EQ(disc.verdict, "holds");
  const auto square = CriticalDetCheck2d(ConvexBody::Cube(2, 1), Zn(2));
  EXPECT_EQ(square.critical_squared, 1);
  EXPECT_EQ(square.verdict, "equal");
  const auto hex = CriticalDetCheck2d(ConvexBody::Ball(2), Lattice::FromGram(kHexGram));
  EXPECT_EQ(hex.verdict, "equal");
  EXPECT_EQ(ErrorCodeOf([] {
              CriticalDetCheck2d(ConvexBody::Polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                                 Zn(2));
            }),
            "unsupported");
}

TEST(CriticalDetTest, RandomLatticesSatisfyInequality) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const Lattice l = RandomLattice2(rng);
    for (const ConvexBody& body :
         {ConvexBody::Ball(2), ConvexBody::Cube(2, 1), ConvexBody::Box({2, Rat(1, 3)}),
          ConvexBody::Forms(RatMatrix{{1, 1}, {1, -1}}, {1, 1})}) {
      const auto check = CriticalDetCheck2d(body, l);
      EXPECT_NE(check.verdict, "fails") << trial << " " << body.kind();
    }
  }
}

// Smallest determinant of a lattice with no nonzero point strictly inside the
// body, over reduced bases b1 = (1, 0), b2 = (x, y) on a rational grid.
Rat GridCriticalSquared(const ConvexBody& body) {
  auto admissible = [&](const Lattice& l) {
    for (const BodyPoint& p : PointsInBody(l, body, 1)) {
      const bool zero = p.point.coeffs[0] == 0 && p.point.coeffs[1] == 0;
      if (!zero && p.gauge2 < 1) return false;
    }
    return true;
  };
  auto lattice = [](int i, int j) {
    return Lattice::FromBasis(RatMatrix{{1, Frac(i, 200)}, {0, Frac(j, 1000)}});
  };
  Rat best = -1;
  for (int i = 0; i <= 100; ++i) {
    // Raising y moves every point off the first axis outward, so
    // admissibility is monotone in y: bisect for the least admissible y.
    int lo = 0, hi = 2000;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      (admissible(lattice(i, mid)) ? hi : lo) = mid;
    }
    const Rat det2 = lattice(i, hi).det_squared();
    if (best < 0 || det2 < best) best = det2;
  }
  return best;
}

TEST(CriticalDetTest, BuiltInValuesMatchGridSearch) {
  const Rat disc = GridCriticalSquared(ConvexBody::Ball(2));
  EXPECT_GE(disc, Rat(3, 4));
  EXPECT_LT(disc - Rat(3, 4), Rat(1, 100));
  const Rat square = GridCriticalSquared(ConvexBody::Cube(2, 1));
  EXPECT_EQ(square, 1);
}

// --- Hlawka-Minkowski --------------------------------------------------------------

TEST(HlawkaTest, Examples) {
  const auto hex = HlawkaWitnessCheck(ConvexBody::Ball(2), Lattice::FromGram(kHexGram));
  EXPECT_EQ(hex.verdict, "holds");
  EXPECT_NEAR(Mid(hex.det), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(Mid(hex.bound), 3 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(Mid(hex.gap), 3 / std::numbers::pi - std::sqrt(3.0) / 2, 1e-15);

  const auto diamond =
      HlawkaWitnessCheck(ConvexBody::Cube(2, 1), Lattice::FromBasis(RatMatrix{{1, 1}, {1, -1}}));
  EXPECT_EQ(diamond.verdict, "fails");  // det 2 against 12 / pi^2

  EXPECT_EQ(ErrorCodeOf([] {
              HlawkaWitnessCheck(ConvexBody::Ball(2, Rat(9, 4)), Zn(2));
            }),
            "inadmissible");
}

}  // namespace
}  // namespace gon
