#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gon/lattice.hpp"

namespace gon {
namespace {

Lattice Hexagonal() {
  // Gram matrix [[1, 1/2], [1/2, 1]]; no rational embedding exists.
  return Lattice::FromGram(RatMatrix{{1, Rat(1, 2)}, {Rat(1, 2), 1}});
}

Lattice Fcc() {
  return Lattice::FromBasis(RatMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

Lattice EvenSum2d() { return Lattice::FromBasis(RatMatrix{{2, 1}, {0, 1}}); }

// Oracle: every coefficient vector in a cube, filtered by the form directly.
std::vector<IntVec> BruteForce(const RatMatrix& gram, const Rat& bound, int range) {
  const std::size_t n = gram.rows();
  std::vector<IntVec> out;
  IntVec m(n, -range);
  for (;;) {
    if (std::any_of(m.begin(), m.end(), [](std::int64_t x) { return x != 0; }) &&
        gram.QuadraticValue(m) <= bound) {
      out.push_back(m);
    }
    std::size_t k = 0;
    while (k < n && m[k] == range) m[k++] = -range;
    if (k == n) break;
    ++m[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Lattice, ConstructionErrors) {
  try {
    Lattice::FromBasis(RatMatrix{{1, 2}, {0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "degenerate-basis");
  }
  try {
    Lattice::FromBasis(RatMatrix{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "dimension");
  }
  try {
    Lattice::FromBasis(RatMatrix::Identity(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "dimension");
  }
  try {
    Lattice::FromGram(RatMatrix{{1, 2}, {2, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "degenerate-basis");
  }
  try {
    Hexagonal().basis();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unsupported");
  }
}

TEST(Lattice, Determinants) {
  EXPECT_EQ(Fcc().det_abs_exact(), Rat(2));
  EXPECT_EQ(EvenSum2d().det_abs_exact(), Rat(2));
  EXPECT_FALSE(Hexagonal().det_abs_exact().has_value());
  EXPECT_EQ(Hexagonal().det_squared(), Rat(3, 4));
  // sqrt(3)/2 = 0.8660254...
  EXPECT_TRUE(Hexagonal().det_abs().Enclose(Rat(1, 1000000)).Overlaps(
      RealEnclosure(Frac(866025, 1000000), Frac(866026, 1000000))));
}

TEST(Lattice, BallCountsOnKnownLattices) {
  const Lattice z2 = Lattice::FromBasis(RatMatrix::Identity(2));
  EXPECT_EQ(EnumerateInBall(z2, 1).size(), 4u);
  EXPECT_EQ(EnumerateInBall(z2, 2).size(), 8u);
  EXPECT_EQ(FindMinimalVectors(Hexagonal()).vectors.size(), 6u);
  EXPECT_EQ(FindMinimalVectors(Hexagonal()).min_norm2, Rat(1));
  EXPECT_EQ(FindMinimalVectors(Fcc()).vectors.size(), 12u);
  EXPECT_EQ(FindMinimalVectors(Fcc()).min_norm2, Rat(2));
  const Lattice z3 = Lattice::FromBasis(RatMatrix::Identity(3));
  EXPECT_EQ(FindMinimalVectors(z3).vectors.size(), 6u);
}

TEST(Lattice, EnumerationIsLexicographicAndSymmetric) {
  const auto pts = EnumerateForm(Fcc().gram(), 6);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  for (const IntVec& m : pts) {
    IntVec neg = m;
    for (auto& x : neg) x = -x;
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), neg));
  }
}

TEST(Lattice, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 2 + rng() % 2;
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
    }
    if (b.Determinant() == 0) continue;
    const RatMatrix g = b.Transpose() * b;
    const Rat bound(static_cast<long>(1 + rng() % 10));
    // Any m with m^T G m <= bound has |m_i| <= sqrt(bound * (G^-1)_ii); cap the
    // brute-force cube at that radius.
    const RatMatrix inv = g.Inverse();
    Rat reach = 0;
    for (std::size_t i = 0; i < n; ++i) reach = std::max(reach, Rat(bound * inv(i, i)));
    const Int radius = ISqrt(Ceil(reach)) + 1;
    if (radius > 12) continue;
    EXPECT_EQ(EnumerateForm(g, bound), BruteForce(g, bound, ToInt64(radius)))
        << g.ToString() << " bound " << ToString(bound);
    ++checked;
  }
}

TEST(Lattice, BudgetIsEnforced) {
  EnumerateOptions opts;
  opts.max_points = 100;
  try {
    EnumerateForm(RatMatrix::Identity(3), 10000, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "budget");
  }
  std::stop_source stop;
  stop.request_stop();
  EnumerateOptions cancelled;
  cancelled.stop = stop.get_token();
  try {
    EnumerateForm(RatMatrix::Identity(4), 400, cancelled);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "budget");
  }
}

TEST(Lattice, Reduce2dExamples) {
  const Lattice skew = Lattice::FromBasis(RatMatrix{{1, 5}, {0, 1}});
  const Reduced2d r = Reduce2d(skew);
  const RatMatrix& g = r.lattice.gram();
  EXPECT_EQ(g(0, 0), Rat(1));
  EXPECT_EQ(g(1, 1), Rat(1));
  EXPECT_EQ(g(0, 1), Rat(0));
  try {
    Reduce2d(Fcc());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "dimension");
  }
}

TEST(Lattice, Reduce2dPreservesLatticeAndReduces) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    RatMatrix b{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    if (b.Determinant() == 0) continue;
    const Lattice l = Lattice::FromBasis(b);
    const Reduced2d r = Reduce2d(l);
    const auto& t = r.transform;
    EXPECT_EQ(t[0][0] * t[1][1] - t[0][1] * t[1][0], 1);
    RatMatrix tm{{Rat(static_cast<long>(t[0][0])), Rat(static_cast<long>(t[0][1]))},
                 {Rat(static_cast<long>(t[1][0])), Rat(static_cast<long>(t[1][1]))}};
    EXPECT_EQ(r.lattice.basis(), b * tm);
    const RatMatrix& g = r.lattice.gram();
    EXPECT_LE(g(0, 0), g(1, 1));
    EXPECT_LE(2 * Abs(g(0, 1)), g(0, 0));
    // The first reduced vector is a shortest vector.
    EXPECT_EQ(g(0, 0), FindMinimalVectors(l).min_norm2);
  }
}

TEST(Lattice, SuccessiveMinimaExamples) {
  const Lattice z2 = Lattice::FromBasis(RatMatrix::Identity(2));
  const auto unit = ComputeSuccessiveMinima(z2, ConvexBody::Ball(2, 1));
  EXPECT_EQ(unit.lambda_squared, (RatVec{1, 1}));
  EXPECT_EQ(unit.witnesses[0].ambient, (RatVec{1, 0}));
  EXPECT_EQ(unit.witnesses[1].ambient, (RatVec{0, 1}));

  const auto box = ComputeSuccessiveMinima(z2, ConvexBody::Box({2, Rat(1, 2)}));
  EXPECT_EQ(box.lambda_squared, (RatVec{Rat(1, 4), 4}));

  const auto even = ComputeSuccessiveMinima(EvenSum2d(), ConvexBody::Ball(2, 1));
  EXPECT_EQ(even.lambda_squared, (RatVec{2, 2}));
  EXPECT_EQ(even.witnesses[0].ambient, (RatVec{1, 1}));
  EXPECT_TRUE(even.lambda[0].Enclose(Rat(1, 1000000)).Overlaps(
      RealEnclosure(Frac(1414213, 1000000), Frac(1414214, 1000000))));
}

TEST(Lattice, SuccessiveMinimaGramOnly) {
  const auto hex = ComputeSuccessiveMinima(Hexagonal(), ConvexBody::Ball(2, 1));
  EXPECT_EQ(hex.lambda_squared, (RatVec{1, 1}));
  try {
    ComputeSuccessiveMinima(Hexagonal(), ConvexBody::Cube(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unsupported");
  }
}

TEST(Lattice, SuccessiveMinimaProperties) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> half(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
    }
    if (b.Determinant() == 0) continue;
    const Lattice l = Lattice::FromBasis(b);
    RatVec h;
    for (std::size_t i = 0; i < n; ++i) h.push_back(half(rng));
    const ConvexBody body = ConvexBody::Box(h);
    const auto sm = ComputeSuccessiveMinima(l, body);
    ASSERT_EQ(sm.lambda_squared.size(), n);
    EXPECT_TRUE(std::is_sorted(sm.lambda_squared.begin(), sm.lambda_squared.end()));
    IndependenceTracker tracker(n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_TRUE(tracker.TryAdd(sm.witnesses[k].coeffs));
      EXPECT_EQ(body.GaugeSquared(sm.witnesses[k].ambient), sm.lambda_squared[k]);
    }
    // No nonzero point is strictly shorter than lambda_1.
    const auto inner = PointsInBody(l, body, sm.lambda_squared[0]);
    for (const auto& p : inner) EXPECT_GE(p.gauge2, sm.lambda_squared[0]);
  }
}

TEST(Lattice, PointsInBodyMatchesMembership) {
  const ConvexBody body = ConvexBody::Forms(RatMatrix{{1, 1}, {1, -1}}, {1, 1});
  const Lattice z2 = Lattice::FromBasis(RatMatrix::Identity(2));
  const auto pts = PointsInBody(z2, body, 1);
  // |x + y| <= 1 and |x - y| <= 1 holds for the four unit vectors only.
  EXPECT_EQ(pts.size(), 4u);
  for (const auto& p : pts) EXPECT_NE(body.Classify(p.point.ambient), Membership::kOutside);
}

TEST(Lattice, IndependenceTracker) {
  IndependenceTracker t(3);
  EXPECT_TRUE(t.TryAdd({1, 2, 3}));
  EXPECT_FALSE(t.TryAdd({2, 4, 6}));
  EXPECT_TRUE(t.TryAdd({0, 1, 1}));
  EXPECT_FALSE(t.TryAdd({1, 3, 4}));
  EXPECT_TRUE(t.TryAdd({0, 0, 1}));
  EXPECT_EQ(t.rank(), 3u);
}


TEST(Lattice, FormExamples) {
  // X^2 + Y^2 + Z^2 + XY + YZ + XZ.
  const Rat h(1, 2);
  const Lattice fcc_form = Lattice::FromGram(RatMatrix{{1, h, h}, {h, 1, h}, {h, h, 1}});
  const auto mv = FindMinimalVectors(fcc_form);
  EXPECT_EQ(mv.min_norm2, Rat(1));
  EXPECT_EQ(mv.vectors.size(), 12u);

  const Reduced2d z2 = Reduce2d(Lattice::FromBasis(RatMatrix{{1, 100}, {0, 1}}));
  EXPECT_EQ(z2.lattice.basis(), RatMatrix::Identity(2));

  const Reduced2d hex = Reduce2d(Lattice::FromGram(RatMatrix{{1, Rat(3, 2)}, {Rat(3, 2), 3}}));
  EXPECT_EQ(hex.lattice.gram()(0, 0), Rat(1));
  EXPECT_EQ(hex.lattice.gram()(1, 1), Rat(1));
  EXPECT_EQ(Abs(hex.lattice.gram()(0, 1)), h);

  EXPECT_EQ(Reduce2d(EvenSum2d()).lattice.gram()(0, 0), Rat(2));
}

TEST(Lattice, EvenSumBallMatchesOracle) {
  std::vector<RatVec> got;
  for (const auto& p : EnumerateInBall(EvenSum2d(), 2)) got.push_back(p.ambient);
  std::sort(got.begin(), got.end());
  // Oracle: even-sum integer points of norm <= 2 by direct scan.
  std::vector<RatVec> want;
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      if ((x + y) % 2 == 0 && (x != 0 || y != 0) && x * x + y * y <= 2) {
        want.push_back({x, y});
      }
    }
  }
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  // (2, 0) has norm 4, so only +-(1, 1) and +-(1, -1) remain.
  EXPECT_EQ(got.size(), 4u);
}

Lattice RandomLattice(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
    }
    if (b.Determinant() != 0) return Lattice::FromBasis(b);
  }
}

TEST(Lattice, FirstMinimumAgreesWithMinimalVectors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Lattice l = RandomLattice(rng, 2 + trial % 3);
    const auto sm = ComputeSuccessiveMinima(l, ConvexBody::Ball(l.dim(), 1));
    EXPECT_EQ(sm.lambda_squared[0], FindMinimalVectors(l).min_norm2);
  }
}

TEST(Lattice, SecondTheoremBounds) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> half(1, 5);
  for (int trial = 0; trial < 45; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Lattice l = RandomLattice(rng, n);
    RatVec h;
    for (std::size_t i = 0; i < n; ++i) h.push_back(Frac(half(rng), half(rng)));
    const ConvexBody body = trial % 2 == 0 ? ConvexBody::Box(h) : ConvexBody::Ball(n, h[0]);
    const auto sm = ComputeSuccessiveMinima(l, body);
    Rat fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
    const Rat upper = Pow(Rat(2), static_cast<long>(n));
    const Rat lower = upper / fact;
    const Real vol = body.Volume();
    if (auto v = vol.exact()) {
      // Squared form: prod lambda_j^2 * vol^2 / det^2 is rational.
      Rat sq = *v * *v / l.det_squared();
      for (const Rat& x : sm.lambda_squared) sq *= x;
      EXPECT_LE(lower * lower, sq);
      EXPECT_LE(sq, upper * upper);
    } else {
      Real prod = vol / l.det_abs();
      for (const Real& x : sm.lambda) prod = prod * x;
      EXPECT_EQ(CertifiedCompare(Real(lower), prod), Ordering::kLess);
      EXPECT_EQ(CertifiedCompare(prod, Real(upper)), Ordering::kLess);
    }
  }
}

}  // namespace
}  // namespace gon
