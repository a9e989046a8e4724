#include <algorithm>
#include <numeric>

#include "gon/counting.hpp"
#include "util/int_math.hpp"

namespace gon {

using detail::FromI128;
using detail::FromI64;
using detail::ISqrt64;

namespace {

void CheckRk(std::int64_t n, int k) {
  if (n < 0) throw Error(ErrorKind::kDomain, "n must be nonnegative");
  if (k < 1) throw Error(ErrorKind::kDomain, "k must be positive");
}

std::int64_t R1(std::int64_t n) {
  if (n == 0) return 1;
  const std::int64_t s = ISqrt64(n);
  return s * s == n ? 2 : 0;
}

std::int64_t R2(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t a = -ISqrt64(n); a * a <= n; ++a) total += R1(n - a * a);
  return total;
}

}  // namespace

std::vector<Int> RkTable(std::int64_t n_max, int k, std::uint64_t budget) {
  CheckRk(n_max, k);
  const double cost = static_cast<double>(k) * static_cast<double>(n_max + 1) *
                      std::sqrt(static_cast<double>(n_max + 1));
  if (cost > static_cast<double>(budget)) {
    throw Error(ErrorKind::kBudget, "r_k table exceeds the work budget");
  }
  const auto size = static_cast<std::size_t>(n_max + 1);
  std::vector<__int128> table(size, 0);
  for (std::size_t m = 0; m < size; ++m) table[m] = R1(static_cast<std::int64_t>(m));
  for (int step = 1; step < k; ++step) {
    std::vector<__int128> next(size, 0);
    for (std::size_t m = 0; m < size; ++m) {
      __int128 acc = table[m];
      for (std::size_t a = 1; a * a <= m; ++a) acc += 2 * table[m - a * a];
      next[m] = acc;
    }
    table = std::move(next);
  }
  std::vector<Int> out;
  out.reserve(size);
  for (__int128 v : table) out.push_back(FromI128(v));
  return out;
}

Int Rk(std::int64_t n, int k) {
  CheckRk(n, k);
  if (k == 1) return R1(n);
  if (k == 2) return R2(n);
  if (k == 3) {
    std::int64_t total = 0;
    for (std::int64_t a = -ISqrt64(n); a * a <= n; ++a) total += R2(n - a * a);
    return total;
  }
  return RkTable(n, k).back();
}

Int CircleCount(const Rat& x) {
  if (x < 0) throw Error(ErrorKind::kDomain, "x must be nonnegative");
  return BallCount(2, ToInt64(Floor(x)));
}

Int BallCount(int d, std::int64_t x) {
  if (d < 1) throw Error(ErrorKind::kDomain, "dimension must be positive");
  if (x < 0) return 0;
  const std::int64_t s = ISqrt64(x);
  if (d == 1) return 2 * s + 1;
  if (d == 2) {
    std::int64_t total = 0;
    for (std::int64_t a = -s; a <= s; ++a) total += 2 * ISqrt64(x - a * a) + 1;
    return FromI64(total);
  }
  Int total = 0;
  for (std::int64_t a = -s; a <= s; ++a) total += BallCount(d - 1, x - a * a);
  return total;
}

GaussBoundsCheck GaussCircleBoundsCheck(const Rat& x) {
  if (x <= Rat(1, 2)) throw Error(ErrorKind::kDomain, "x must exceed 1/2");
  GaussBoundsCheck out;
  out.count = CircleCount(x);
  // pi (sqrt x -+ sqrt 2 / 2)^2 = pi (x + 1/2 -+ sqrt(2 x)).
  const Real root = Real::Sqrt(Real(Rat(2 * x)));
  const Real base = Real(Rat(x + Rat(1, 2)));
  const Real lower = Real::Pi() * (base - root);
  const Real upper = Real::Pi() * (base + root);
  const auto lo_ok = CertifiedLess(lower, Real(Rat(out.count)));
  const auto hi_ok = CertifiedLess(Real(Rat(out.count)), upper);
  if (!lo_ok || !hi_ok) {
    throw Error(ErrorKind::kPrecision, "Gauss bound comparison undecided at x = " + ToString(x));
  }
  out.lower_holds = *lo_ok;
  out.upper_holds = *hi_ok;
  out.lower = lower.Eval(64);
  out.upper = upper.Eval(64);
  return out;
}

namespace {

constexpr long kScanBits = 96;

void AddRow(ErrorScanReport& report, std::int64_t x, Int exact, const Real& main) {
  const Real error = Real(Rat(exact)) - main;
  const Real normalized = error / Real::Pow(Real(Rat(FromI64(x))), report.theta);
  ScanRow row{x, std::move(exact), main.Eval(kScanBits), error.Eval(kScanBits),
              normalized.Eval(kScanBits)};
  report.max_abs_normalized =
      std::max({report.max_abs_normalized, Rat(Abs(row.normalized.lo())),
                Rat(Abs(row.normalized.hi()))});
  report.rows.push_back(std::move(row));
}

void CheckXs(const std::vector<std::int64_t>& xs, std::int64_t max_x) {
  for (std::int64_t x : xs) {
    if (x < 1) throw Error(ErrorKind::kDomain, "scan points must be positive");
    if (x > max_x) throw Error(ErrorKind::kBudget, "scan point exceeds the supported range");
  }
}

}  // namespace

ErrorScanReport BallVolumeLimitScan(int d, const std::vector<std::int64_t>& xs) {
  if (d < 2 || d > 5) throw Error(ErrorKind::kDomain, "d must lie in 2..5");
  // Work grows like x^((d-1)/2).
  const std::int64_t caps[] = {0, 0, 1'000'000'000'000, 100'000'000, 1'000'000, 100'000};
  CheckXs(xs, caps[d]);
  ErrorScanReport report{Frac(d, 2), {}, 0};
  const Real volume = UnitBallVolume(d);
  for (std::int64_t x : xs) {
    const Real main = volume * Real::Pow(Real(Rat(FromI64(x))), Frac(d, 2));
    AddRow(report, x, BallCount(d, x), main);
  }
  return report;
}

ErrorScanReport CircleErrorScan(const std::vector<std::int64_t>& xs) {
  CheckXs(xs, 1'000'000'000'000);
  ErrorScanReport report{Rat(1, 2), {}, 0};
  for (std::int64_t x : xs) {
    AddRow(report, x, BallCount(2, x), Real::Pi() * Real(Rat(FromI64(x))));
  }
  return report;
}

std::int64_t Divisor(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kDomain, "n must be positive");
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    count *= e + 1;
  }
  return n > 1 ? 2 * count : count;
}

std::int64_t DivisorSummatory(std::int64_t x) {
  if (x < 1) throw Error(ErrorKind::kDomain, "x must be positive");
  if (x > kDivisorMaxX) throw Error(ErrorKind::kBudget, "x exceeds 10^12");
  const std::int64_t s = ISqrt64(x);
  std::int64_t total = 0;
  for (std::int64_t a = 1; a <= s; ++a) total += x / a;
  return 2 * total - s * s;
}

ErrorScanReport DivisorErrorScan(const std::vector<std::int64_t>& xs) {
  CheckXs(xs, kDivisorMaxX);
  ErrorScanReport report{Rat(1, 2), {}, 0};
  const Real c = Real(2) * Real::EulerGamma() - Real(1);
  for (std::int64_t x : xs) {
    const Real rx(Rat(FromI64(x)));
    const Real main = rx * Real::Log(rx) + c * rx;
    AddRow(report, x, FromI64(DivisorSummatory(x)), main);
  }
  return report;
}

// --- Polygons ---------------------------------------------------------------

namespace {

using I128 = __int128;

bool OnSegment(const LatticePoint2& a, const LatticePoint2& b, std::int64_t x,
               std::int64_t y) {
  const I128 cross = static_cast<I128>(b.x - a.x) * (y - a.y) -
                     static_cast<I128>(b.y - a.y) * (x - a.x);
  return cross == 0 && std::min(a.x, b.x) <= x && x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= y && y <= std::max(a.y, b.y);
}

// Even-odd rule for a point known not to lie on the boundary.
bool Inside(const std::vector<LatticePoint2>& v, std::int64_t x, std::int64_t y) {
  bool in = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticePoint2& a = v[i];
    const LatticePoint2& b = v[(i + 1) % v.size()];
    if ((a.y > y) == (b.y > y)) continue;
    // Crossing abscissa a.x + (y - a.y)(b.x - a.x)/(b.y - a.y) compared to x.
    const I128 num = static_cast<I128>(y - a.y) * (b.x - a.x);
    const I128 den = b.y - a.y;
    const I128 lhs = static_cast<I128>(x - a.x) * den;
    if (den > 0 ? lhs < num : lhs > num) in = !in;
  }
  return in;
}

}  // namespace

PickReport PickCount(const LatticePolygon& polygon) {
  const auto& v = polygon.vertices();
  PickReport out;
  out.area = polygon.Area();
  std::int64_t boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticePoint2& a = v[i];
    const LatticePoint2& b = v[(i + 1) % v.size()];
    boundary += std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
  }
  out.boundary = boundary;
  out.convex = polygon.IsConvex();
  // area = interior + boundary / 2 - 1.
  const Rat interior = out.area - Frac(out.boundary, 2) + 1;
  out.interior = interior.get_num();
  out.total = out.interior + out.boundary;
  out.identity_holds = interior.get_den() == 1 &&
                       Rat(out.total) == out.area + Frac(out.boundary, 2) + 1;

  std::int64_t lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
  }
  const bool small = std::max({std::abs(lo_x), std::abs(hi_x), std::abs(lo_y),
                               std::abs(hi_y)}) <= kPickScanLimit;
  if (small) {
    std::int64_t in = 0, on = 0;
    for (std::int64_t x = lo_x; x <= hi_x; ++x) {
      for (std::int64_t y = lo_y; y <= hi_y; ++y) {
        bool edge = false;
        for (std::size_t i = 0; i < v.size() && !edge; ++i) {
          edge = OnSegment(v[i], v[(i + 1) % v.size()], x, y);
        }
        if (edge) {
          ++on;
        } else if (Inside(v, x, y)) {
          ++in;
        }
      }
    }
    out.scan_interior = in;
    out.scan_boundary = on;
    out.identity_holds = out.identity_holds && *out.scan_interior == out.interior &&
                         *out.scan_boundary == out.boundary;
  }
  return out;
}

JarnikReport JarnikCheck(const LatticePolygon& polygon) {
  const PickReport pick = PickCount(polygon);
  const auto& v = polygon.vertices();
  Real length(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticePoint2& a = v[i];
    const LatticePoint2& b = v[(i + 1) % v.size()];
    const Int dx = b.x - a.x;
    const Int dy = b.y - a.y;
    length = length + Real::Sqrt(Real(Rat(dx * dx + dy * dy)));
  }
  JarnikReport out;
  out.enclosed = pick.interior;
  out.enclosed_inclusive = pick.total;
  out.area = pick.area;
  out.length = length.Eval(64);
  auto certified = [&](const Int& count) {
    const auto less = CertifiedLess(Real(Rat(Abs(Rat(out.area - count)))), length);
    if (!less) throw Error(ErrorKind::kPrecision, "Jarnik comparison undecided");
    return *less;
  };
  out.holds = certified(out.enclosed);
  out.holds_inclusive = certified(out.enclosed_inclusive);
  return out;
}

// --- Visibility -------------------------------------------------------------

bool Visible(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::kDomain, "the origin has no direction");
  return std::gcd(std::abs(a), std::abs(b)) == 1;
}

Rat VisibleDensity(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kDomain, "N must be positive");
  if (n > 100'000'000) throw Error(ErrorKind::kBudget, "N exceeds 10^8");
  // Coprime pairs in [1, N]^2 = sum_d mu(d) floor(N / d)^2.
  std::vector<std::int8_t> mu(static_cast<std::size_t>(n) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::int64_t k = p; k <= n; k += p) {
      if (k > p) composite[k] = true;
      mu[k] = static_cast<std::int8_t>(-mu[k]);
    }
    if (p <= n / p) {
      for (std::int64_t k = p * p; k <= n; k += p * p) mu[k] = 0;
    }
  }
  I128 total = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    const I128 q = n / d;
    total += mu[d] * q * q;
  }
  return Frac(FromI128(total), FromI128(static_cast<I128>(n) * n));
}

}  // namespace gon
