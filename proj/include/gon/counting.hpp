#pragma once

// Lattice-point counts in discs, balls and polygons, the divisor problem,
// visibility and the orchard problem.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gon/body.hpp"
#include "gon/exact.hpp"

namespace gon {

// --- Sums of squares ------------------------------------------------------

// r_k(n): ordered, signed representations of n as a sum of k squares.
Int Rk(std::int64_t n, int k);
// r_k(0..n_max) by repeated convolution with the square indicator. Throws
// Error(kBudget) when k * n_max * sqrt(n_max) exceeds `budget`.
std::vector<Int> RkTable(std::int64_t n_max, int k, std::uint64_t budget = 20'000'000'000);

// R(x) = #{(a, b) : a^2 + b^2 <= x}.
Int CircleCount(const Rat& x);
// #{v in Z^d : |v|^2 <= x}.
Int BallCount(int d, std::int64_t x);

struct GaussBoundsCheck {
  Int count;
  RealEnclosure lower;  // pi (sqrt x - sqrt 2 / 2)^2
  RealEnclosure upper;  // pi (sqrt x + sqrt 2 / 2)^2
  bool lower_holds;
  bool upper_holds;
};
// Both strict inequalities certified; Error(kPrecision) if undecidable,
// Error(kDomain) for x <= 1/2.
GaussBoundsCheck GaussCircleBoundsCheck(const Rat& x);

// --- Error scans ------------------------------------------------------------

struct ScanRow {
  std::int64_t x;
  Int exact;
  RealEnclosure main;        // main term
  RealEnclosure error;       // exact - main
  RealEnclosure normalized;  // error / x^theta
};
struct ErrorScanReport {
  Rat theta;
  std::vector<ScanRow> rows;
  Rat max_abs_normalized;  // upper bound over all rows
};

// Ball counts against V_d x^(d/2); theta = d/2, so `normalized` is the
// residual x^(-d/2) sum r_d(n) - V_d.
ErrorScanReport BallVolumeLimitScan(int d, const std::vector<std::int64_t>& xs);
// R(x) against pi x, normalized by sqrt x.
ErrorScanReport CircleErrorScan(const std::vector<std::int64_t>& xs);

// --- Divisor problem --------------------------------------------------------

inline constexpr std::int64_t kDivisorMaxX = 1'000'000'000'000;
std::int64_t Divisor(std::int64_t n);
// Hyperbola identity D(x) = 2 sum_{a <= sqrt x} floor(x / a) - floor(sqrt x)^2.
std::int64_t DivisorSummatory(std::int64_t x);
// D(x) against x log x + (2 gamma - 1) x, normalized by sqrt x.
ErrorScanReport DivisorErrorScan(const std::vector<std::int64_t>& xs);

// --- Polygons -------------------------------------------------------------

struct PickReport {
  Int interior;  // from the identity
  Int boundary;
  Rat area;
  Int total;     // interior + boundary
  bool convex;
  // Independent classification of every point in the bounding box, run when
  // all coordinates lie within +-kPickScanLimit.
  std::optional<Int> scan_interior;
  std::optional<Int> scan_boundary;
  bool identity_holds;  // total = area + boundary / 2 + 1, cross-checked
};
inline constexpr std::int64_t kPickScanLimit = 1000;
PickReport PickCount(const LatticePolygon& polygon);

struct JarnikReport {
  Int enclosed;            // strictly interior lattice points
  Int enclosed_inclusive;  // boundary points included
  Rat area;
  RealEnclosure length;
  bool holds;            // |area - enclosed| < length, certified
  bool holds_inclusive;  // same for the boundary-inclusive count
};
JarnikReport JarnikCheck(const LatticePolygon& polygon);

// --- Visibility -------------------------------------------------------------

// gcd(|a|, |b|) = 1; Error(kDomain) for the origin.
bool Visible(std::int64_t a, std::int64_t b);
// #{visible points in [1, N]^2} / N^2.
Rat VisibleDensity(std::int64_t n);

struct OrchardResult {
  bool blocked;
  std::optional<RatVec> escape;  // certified escaping direction
  std::size_t trees;
  std::string certificate;
};
// Discs of radius r at the nonzero lattice points with |p| <= R; observer at
// the origin. Requires R >= 2 and 0 < r <= 1/2.
OrchardResult OrchardVisibility(const Rat& big_r, const Rat& r);

}  // namespace gon
