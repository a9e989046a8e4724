#pragma once

// Packing invariants of lattices: density, kissing number, Hermite
// constants and their classical bounds, planar Voronoi cells and the
// critical-determinant and Hlawka-Minkowski checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gon/body.hpp"
#include "gon/exact.hpp"
#include "gon/lattice.hpp"

namespace gon {

struct PackingReport {
  std::string lattice_id;
  Rat min_norm2;
  std::size_t kissing;
  Real density;             // vol(ball of radius sqrt(min_norm2) / 2) / det
  Real hermite_invariant;   // min_norm2 / det^(2/n)
  std::string density_verdict;  // density vs 1: "holds", "equal" or "fails"
};
PackingReport AnalyzePacking(const Lattice& lattice, std::string lattice_id = "",
                             const EnumerateOptions& options = {});
Real PackingDensity(const Lattice& lattice, const EnumerateOptions& options = {});
std::size_t KissingNumber(const Lattice& lattice, const EnumerateOptions& options = {});

// gamma = 2^exp2 3^exp3, enough for every tabulated value.
struct HermiteValue {
  Rat exp2;
  Rat exp3;
  Real value() const;
  bool operator==(const HermiteValue&) const = default;
};
// Known Hermite constants for n in {2, 3, 4, 5}.
std::optional<HermiteValue> KnownHermite(int n);
// gamma_24 = 4, carried as reference data only.
inline constexpr int kHermite24 = 4;

struct HermiteBounds {
  int n;
  Real hermite;     // (4/3)^((n-1)/2)
  Real minkowski;   // (4/pi) Γ(n/2 + 1)^(2/n)
  Real blichfeldt;  // (2/pi) Γ(n/2 + 2)^(2/n)
  std::optional<HermiteValue> known;
  std::string note;  // set when a commonly printed value is contradicted
};
// Error(kDomain) outside 2..8.
HermiteBounds HermiteBoundsFor(int n);

// delta = (pi gamma / 4)^(n/2) / Γ(n/2 + 1); Error(kDomain) unless gamma > 0.
Real GaussDeltaGamma(int n, const Real& gamma);

struct ReducedFormScan {
  RatMatrix best_gram;    // first form attaining the maximum
  Rat min;                // its first minimum
  Rat best_gamma_power;   // min^n / det, maximal over the scan
  std::size_t forms = 0;  // positive definite forms examined
};
// Every integral positive definite Gram matrix with
// 1 <= g_11 <= ... <= g_nn <= max_diag and |2 g_ij| <= g_ii for i < j.
// Error(kDomain) outside 2..8 or for max_diag < 1.
ReducedFormScan ScanReducedForms(int n, int max_diag, const EnumerateOptions& options = {});

struct MordellGammaReport {
  int n;
  HermiteValue lhs;            // gamma_n
  HermiteValue corrected_rhs;  // gamma_(n-1)^((n-1)/(n-2))
  HermiteValue literal_rhs;    // gamma_(n-1)^((n-1)(n-2))
  std::string corrected_verdict;
  std::string literal_verdict;
};
// Requires known values for n - 1 and n; Error(kDomain) otherwise.
MordellGammaReport MordellGammaCheck(int n);

struct VoronoiCell2d {
  // Exact vertices, counter-clockwise: ambient coordinates when the lattice
  // has a basis, coefficient coordinates otherwise.
  Polygon cell;
  bool coefficient_coordinates;
  std::vector<IntVec> relevant;  // vectors whose bisectors bound the cell
  Rat coefficient_area;          // area in the coordinates of `cell`
  Real area;                     // Euclidean area, equal to det
};
// Error(kDimension) unless dim 2.
VoronoiCell2d VoronoiCell(const Lattice& lattice);

struct CriticalDetCheck {
  SuccessiveMinima minima;
  Rat critical_squared;  // Δ(C)^2
  Real lhs;              // lambda_1 lambda_2 Δ(C)
  Real det;
  std::string verdict;   // lhs vs det, decided on exact squares
};
// Discs, ellipses, boxes and bounded forms boxes in the plane; other bodies
// raise Error(kUnsupported).
CriticalDetCheck CriticalDetCheck2d(const ConvexBody& body, const Lattice& lattice,
                                    const EnumerateOptions& options = {});
// Δ(C)^2 for the supported planar bodies.
Rat CriticalDeterminantSquared2d(const ConvexBody& body);

struct HlawkaCheck {
  Real det;
  Real bound;  // vol(S) / (2 zeta(n))
  Real gap;    // bound - det
  std::string verdict;
};
// Error(kInadmissible) when a nonzero lattice point lies in the interior.
HlawkaCheck HlawkaWitnessCheck(const ConvexBody& body, const Lattice& witness,
                               const EnumerateOptions& options = {});

}  // namespace gon
