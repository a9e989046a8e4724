#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gon/counting.hpp"
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

// Brute-force r_k(n) by enumerating every coordinate in [-sqrt n, sqrt n].
std::int64_t BruteRk(std::int64_t n, int k) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t a = -10; a <= 10; ++a) {
    if (a * a <= n) total += BruteRk(n - a * a, k - 1);
  }
  return total;
}

std::int64_t NaiveDivisorSum(std::int64_t x) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= x; ++d) total += x / d;
  return total;
}

// Strictly convex hull (Andrew's monotone chain), counterclockwise.
std::vector<LatticePoint2> Hull(std::vector<LatticePoint2> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  auto cross = [](const LatticePoint2& o, const LatticePoint2& a, const LatticePoint2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<LatticePoint2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Winding-number point classification, independent of the library scan.
std::pair<std::int64_t, std::int64_t> ClassifyConvex(const std::vector<LatticePoint2>& v) {
  std::int64_t lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
  }
  std::int64_t in = 0, on = 0;
  for (std::int64_t x = lo_x; x <= hi_x; ++x) {
    for (std::int64_t y = lo_y; y <= hi_y; ++y) {
      bool inside = true, boundary = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const std::int64_t c = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (c < 0) inside = false;
        if (c == 0) boundary = true;
      }
      if (inside && boundary) ++on;
      if (inside && !boundary) ++in;
    }
  }
  return {in, on};
}

LatticePolygon Poly(std::vector<LatticePoint2> v) { return LatticePolygon(std::move(v)); }

// --- Sums of squares --------------------------------------------------------

TEST(SquaresTest, Examples) {
  EXPECT_EQ(Rk(0, 2), 1);
  EXPECT_EQ(Rk(13, 2), 8);
  EXPECT_EQ(Rk(3, 2), 0);
  EXPECT_EQ(Rk(1, 4), 8);
  EXPECT_EQ(ErrorCodeOf([] { Rk(-1, 2); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { RkTable(1'000'000, 4, 1000); }), "budget");
}

TEST(SquaresTest, MatchesBruteForce) {
  for (int k = 1; k <= 5; ++k) {
    const auto table = RkTable(60, k);
    for (std::int64_t n = 0; n <= 60; ++n) {
      EXPECT_EQ(table[n], BruteRk(n, k)) << "n=" << n << " k=" << k;
      EXPECT_EQ(Rk(n, k), BruteRk(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(SquaresTest, PrimeResidueClasses) {
  for (std::int64_t p = 3; p < 10'000; p += 2) {
    if (!IsPrime(p)) continue;
    EXPECT_EQ(Rk(p, 2), p % 4 == 1 ? 8 : 0) << p;
  }
}

// --- Circle and balls -------------------------------------------------------

TEST(CircleTest, Examples) {
  EXPECT_EQ(CircleCount(0), 1);
  EXPECT_EQ(CircleCount(2), 9);
  EXPECT_EQ(CircleCount(Rat(5, 2)), 9);
  EXPECT_EQ(ErrorCodeOf([] { CircleCount(-1); }), "domain");
}

TEST(CircleTest, PrefixSumOfR2) {
  const auto r2 = RkTable(10'000, 2);
  Int running = 0;
  for (std::int64_t x = 0; x <= 10'000; ++x) {
    running += r2[x];
    ASSERT_EQ(CircleCount(x), running) << x;
  }
  Int million = 0;
  for (const Int& v : RkTable(1'000'000, 2)) million += v;
  EXPECT_EQ(CircleCount(1'000'000), million);
}

TEST(CircleTest, GaussBounds) {
  const auto two = GaussCircleBoundsCheck(2);
  EXPECT_EQ(two.count, 9);
  EXPECT_TRUE(two.lower_holds && two.upper_holds);
  EXPECT_LT(two.lower.hi().get_d(), 1.571);
  EXPECT_GT(two.lower.lo().get_d(), 1.570);
  EXPECT_NEAR(two.upper.lo().get_d(), 14.137, 1e-3);
  for (std::int64_t x : {3, 100, 997, 1'000'000}) {
    const auto check = GaussCircleBoundsCheck(x);
    EXPECT_TRUE(check.lower_holds && check.upper_holds) << x;
  }
  EXPECT_EQ(ErrorCodeOf([] { GaussCircleBoundsCheck(Rat(1, 2)); }), "domain");
}

TEST(CircleTest, BallLimitScan) {
  const auto d2 = BallVolumeLimitScan(2, {1'000'000});
  EXPECT_LT(d2.max_abs_normalized, Rat(1, 100));
  const auto d3 = BallVolumeLimitScan(3, {100'000});
  EXPECT_LT(d3.max_abs_normalized, Rat(1, 20));
  EXPECT_EQ(d3.theta, Rat(3, 2));
  // d = 4 at x = 10 against the convolution table.
  const auto d4 = BallVolumeLimitScan(4, {10});
  Int sum = 0;
  for (const Int& v : RkTable(10, 4)) sum += v;
  EXPECT_EQ(d4.rows[0].exact, sum);
  std::int64_t brute = 0;
  for (std::int64_t n = 0; n <= 10; ++n) brute += BruteRk(n, 4);
  EXPECT_EQ(sum, brute);
  EXPECT_EQ(ErrorCodeOf([] { BallVolumeLimitScan(6, {10}); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { BallVolumeLimitScan(5, {10'000'000}); }), "budget");
}

TEST(CircleTest, ErrorScanEnclosesMainTerm) {
  const auto scan = CircleErrorScan({10, 1000, 100'000});
  for (const auto& row : scan.rows) {
    const double main = std::numbers::pi * static_cast<double>(row.x);
    EXPECT_LE(row.main.lo().get_d(), main * (1 + 1e-12));
    EXPECT_GE(row.main.hi().get_d(), main * (1 - 1e-12));
    EXPECT_LE(Abs(row.normalized.hi()), 3);
  }
}

// --- Divisors ---------------------------------------------------------------

TEST(DivisorTest, Examples) {
  EXPECT_EQ(Divisor(12), 6);
  EXPECT_EQ(Divisor(1), 1);
  for (std::int64_t p : {2, 3, 97, 1'000'003}) EXPECT_EQ(Divisor(p), 2);
  EXPECT_EQ(DivisorSummatory(6), 14);
  EXPECT_EQ(DivisorSummatory(1), 1);
  EXPECT_EQ(ErrorCodeOf([] { Divisor(0); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { DivisorSummatory(kDivisorMaxX + 1); }), "budget");
}

TEST(DivisorTest, HyperbolaMatchesNaive) {
  std::int64_t running = 0;
  for (std::int64_t x = 1; x <= 10'000; ++x) {
    running += Divisor(x);
    ASSERT_EQ(DivisorSummatory(x), running) << x;
    ASSERT_EQ(NaiveDivisorSum(x), running) << x;
  }
}

TEST(DivisorTest, NormalizedErrorStaysSmall) {
  std::vector<std::int64_t> xs;
  for (std::int64_t x = 1; x <= 100'000'000; x = x * 3 / 2 + 1) xs.push_back(x);
  const auto scan = DivisorErrorScan(xs);
  EXPECT_LE(scan.max_abs_normalized, 2);
  // x = 1: D = 1 against main term 2 gamma - 1.
  EXPECT_EQ(scan.rows[0].exact, 1);
  EXPECT_NEAR(scan.rows[0].error.lo().get_d(), 2 - 2 * 0.5772156649015329, 1e-12);
}

// --- Pick and Jarnik ----------------------------------------------------------

TEST(PickTest, Examples) {
  const auto square = PickCount(Poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(square.interior, 0);
  EXPECT_EQ(square.boundary, 4);
  EXPECT_EQ(square.area, 1);
  EXPECT_EQ(square.total, 4);
  EXPECT_TRUE(square.identity_holds);

  const auto triangle = PickCount(Poly({{0, 0}, {4, 0}, {0, 4}}));
  EXPECT_EQ(triangle.area, 8);
  EXPECT_EQ(triangle.boundary, 12);
  EXPECT_EQ(triangle.interior, 3);

  const auto right = PickCount(Poly({{0, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(right.area, 1);
  EXPECT_EQ(right.boundary, 4);
  EXPECT_EQ(right.interior, 0);
  EXPECT_EQ(ErrorCodeOf([] { Poly({{0, 0}, {1, 1}, {2, 2}}); }), "degenerate");
}

TEST(PickTest, NonConvexScanAgrees) {
  // L-shape of area 3.
  const auto l = PickCount(Poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
  EXPECT_FALSE(l.convex);
  EXPECT_EQ(l.area, 3);
  EXPECT_EQ(l.boundary, 8);
  EXPECT_EQ(l.interior, 0);
  EXPECT_TRUE(l.identity_holds);
}

TEST(PickTest, RandomConvexPolygons) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-40, 40);
  int done = 0;
  while (done < 500) {
    std::vector<LatticePoint2> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({coord(rng), coord(rng)});
    const auto hull = Hull(pts);
    if (hull.size() < 3) continue;
    const LatticePolygon poly(hull);
    const auto pick = PickCount(poly);
    const auto [in, on] = ClassifyConvex(hull);
    ASSERT_TRUE(pick.convex);
    ASSERT_TRUE(pick.identity_holds);
    ASSERT_EQ(pick.interior, in);
    ASSERT_EQ(pick.boundary, on);
    ASSERT_EQ(*pick.scan_interior, in);
    ASSERT_EQ(*pick.scan_boundary, on);
    const auto jarnik = JarnikCheck(poly);
    ASSERT_TRUE(jarnik.holds);
    ++done;
  }
}

TEST(JarnikTest, Examples) {
  const auto unit = JarnikCheck(Poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(unit.enclosed, 0);
  EXPECT_EQ(unit.enclosed_inclusive, 4);
  EXPECT_TRUE(unit.holds);
  EXPECT_TRUE(unit.holds_inclusive);

  const auto ten = JarnikCheck(Poly({{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
  EXPECT_EQ(ten.enclosed, 81);
  EXPECT_TRUE(ten.holds);
  EXPECT_NEAR(ten.length.lo().get_d(), 40, 1e-9);

  const auto thin = JarnikCheck(Poly({{0, 0}, {100, 0}, {100, 1}}));
  EXPECT_EQ(thin.area, 50);
  EXPECT_EQ(thin.enclosed, 0);
  EXPECT_TRUE(thin.holds);
}

// --- Visibility ---------------------------------------------------------------

TEST(VisibilityTest, Examples) {
  EXPECT_TRUE(Visible(2, 3));
  EXPECT_FALSE(Visible(2, 4));
  EXPECT_TRUE(Visible(-1, 0));
  EXPECT_FALSE(Visible(0, 5));
  EXPECT_EQ(ErrorCodeOf([] { Visible(0, 0); }), "domain");
}

TEST(VisibilityTest, DensityMatchesGcdCount) {
  for (std::int64_t n : {1, 2, 10, 100, 300}) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= n; ++a) {
      for (std::int64_t b = 1; b <= n; ++b) count += std::gcd(a, b) == 1;
    }
    EXPECT_EQ(VisibleDensity(n), Frac(count, n * n)) << n;
  }
  const double limit = 6 / (std::numbers::pi * std::numbers::pi);
  EXPECT_NEAR(VisibleDensity(1000).get_d(), limit, 0.005);
  for (std::int64_t n : {100, 1000, 10'000}) {
    const double band = 2 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    EXPECT_NEAR(VisibleDensity(n).get_d(), limit, band) << n;
  }
}

// --- Orchard ----------------------------------------------------------------

// Smallest distance from a tree to the ray of angle t, in doubles.
bool RayBlocked(double t, double big_r, double r) {
  const double dx = std::cos(t), dy = std::sin(t);
  const auto bound = static_cast<std::int64_t>(big_r);
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const double n = static_cast<double>(x * x + y * y);
      if (n == 0 || n > big_r * big_r) continue;
      const double along = dx * x + dy * y;
      if (along <= 0) continue;
      if (std::abs(dx * y - dy * x) <= r) return true;
    }
  }
  return false;
}

TEST(OrchardTest, Examples) {
  const auto blocked = OrchardVisibility(20, Rat(1, 2));
  EXPECT_TRUE(blocked.blocked);
  EXPECT_FALSE(blocked.escape);
  EXPECT_EQ(blocked.trees, 1256u);

  const auto escape = OrchardVisibility(2, Rat(1, 100));
  ASSERT_FALSE(escape.blocked);
  ASSERT_TRUE(escape.escape);
  const double t = std::atan2((*escape.escape)[1].get_d(), (*escape.escape)[0].get_d());
  EXPECT_FALSE(RayBlocked(t, 2, 0.01));

  EXPECT_EQ(ErrorCodeOf([] { OrchardVisibility(5, Rat(51, 100)); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { OrchardVisibility(5, 0); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { OrchardVisibility(1, Rat(1, 4)); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { OrchardVisibility(2000, Rat(1, 4)); }), "budget");
}

TEST(OrchardTest, AgreesWithRaySampling) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> radius(2, 12);
  std::uniform_int_distribution<int> denom(2, 40);
  int blocked_count = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int big_r = radius(rng);
    const Rat r(1, denom(rng));
    const auto result = OrchardVisibility(big_r, r);
    if (result.blocked) {
      ++blocked_count;
      // Every sampled direction meets a tree.
      for (int i = 0; i < 3000; ++i) {
        const double t = 2 * std::numbers::pi * (i + 0.5) / 3000;
        ASSERT_TRUE(RayBlocked(t, big_r, r.get_d())) << big_r << " " << r << " " << t;
      }
    } else {
      const double t =
          std::atan2((*result.escape)[1].get_d(), (*result.escape)[0].get_d());
      ASSERT_FALSE(RayBlocked(t, big_r, r.get_d() * (1 - 1e-12))) << big_r << " " << r;
    }
  }
  // The corpus exercises both outcomes.
  EXPECT_GT(blocked_count, 0);
  EXPECT_LT(blocked_count, 40);
}

TEST(OrchardTest, MonotoneInRadius) {
  // Growing the trees can only block more directions.
  for (int big_r : {3, 6, 10}) {
    bool seen_blocked = false;
    for (int d = 40; d >= 2; --d) {
      const bool blocked = OrchardVisibility(big_r, Rat(1, d)).blocked;
      EXPECT_TRUE(blocked || !seen_blocked) << big_r << " 1/" << d;
      seen_blocked = seen_blocked || blocked;
    }
  }
}

}  // namespace
}  // namespace gon
