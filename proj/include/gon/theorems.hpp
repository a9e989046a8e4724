#pragma once

// Constructive versions of the classical lattice-point theorems. Every
// success carries a certificate whose witnesses re-verify exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gon/body.hpp"
#include "gon/exact.hpp"
#include "gon/lattice.hpp"

namespace gon {

// One checked inequality: verdict is "holds", "equal", "fails" or
// "undecided".
struct TranscriptLine {
  std::string claim;
  std::string verdict;
};

struct TheoremCertificate {
  std::string statement;
  std::vector<TranscriptLine> hypotheses;
  std::vector<LatticePoint> witnesses;
  std::vector<TranscriptLine> verification;
};

// "holds" when a < b, "equal" on exact equality, "fails" when a > b,
// "undecided" otherwise.
std::string CompareVerdict(const Real& a, const Real& b);

// --- Minkowski's lattice-point theorem -------------------------------------

enum class MinkowskiMode { kStrict, kClosed };

struct MinkowskiResult {
  LatticePoint point;
  TheoremCertificate certificate;
};

// Strict: requires certified vol(C) > 2^n det and returns an Inside point.
// Closed: requires vol(C) >= 2^n det and may return a Boundary point.
// Throws Error(kHypothesis) when the volume condition is not certified.
MinkowskiResult MinkowskiPoint(const Lattice& lattice, const ConvexBody& body,
                               MinkowskiMode mode,
                               const EnumerateOptions& options = {});

struct MordellStep {
  std::int64_t t;
  std::uint64_t grid_points;  // N(t), origin included
};
struct MordellResult {
  LatticePoint point;
  std::vector<MordellStep> trace;
  TheoremCertificate certificate;
};
inline constexpr std::int64_t kMordellMaxT = 1 << 14;
// Grid (2/t) Z^n in coefficient space; once N(t) > t^n two grid points in
// the body agree mod t and half their difference is the witness.
MordellResult MordellGridSearch(const Lattice& lattice, const ConvexBody& body,
                                const EnumerateOptions& options = {});

// --- Blichfeldt ---------------------------------------------------------

// Half-open box [lo, hi).
struct HalfOpenBox {
  RatVec lo;
  RatVec hi;
};
struct BoxUnion {
  std::vector<HalfOpenBox> boxes;
};
using BlichfeldtRegion = std::variant<ConvexBody, BoxUnion>;

Rat BoxUnionVolume(const BoxUnion& region);
bool Contains(const BlichfeldtRegion& region, const RatVec& x);

struct BlichfeldtResult {
  std::vector<RatVec> points;  // m + 1 distinct points of the region
  Rat cell_size;               // dyadic subdivision that found them
  TheoremCertificate certificate;
};
// Requires certified vol(region) > m det. Cells start at 1/2 per axis in
// coefficient coordinates and halve until some cell corner has m + 1
// lattice translates inside the region.
BlichfeldtResult BlichfeldtPoints(const Lattice& lattice, const BlichfeldtRegion& region,
                                  int m, const EnumerateOptions& options = {});

// --- Linear forms ---------------------------------------------------------

struct LinearFormsResult {
  IntVec x;
  TheoremCertificate certificate;
};
// x != 0 with |(A x)_j| <= lambda_j; requires prod lambda >= |det A| != 0.
LinearFormsResult LinearFormsSolve(const RatMatrix& a, const RatVec& lambda,
                                   const EnumerateOptions& options = {});

// Y = re + i im and its conjugate form.
struct ComplexFormPair {
  RatVec re;
  RatVec im;
};
struct ComplexLinearFormsResult {
  IntVec x;
  Real bound;               // (2/pi)^(s/n) |det|^(1/n)
  Rat det_abs_squared;      // |det|^2 of the complex system
  TheoremCertificate certificate;
};
ComplexLinearFormsResult ComplexLinearFormsSolve(const std::vector<RatVec>& reals,
                                                 const std::vector<ComplexFormPair>& pairs,
                                                 const EnumerateOptions& options = {});

// --- Diophantine approximation -------------------------------------------

struct DirichletResult {
  Int x;
  Int y;
  RealEnclosure error;  // |y alpha - x|
};
// Best |y alpha - x| over 1 <= y <= q, certified below 1/q. The enclosure
// overload requires width < 10^-3 / q^2 (else Error(kPrecision)).
DirichletResult Dirichlet1d(const Real& alpha, const Int& q);
DirichletResult Dirichlet1d(const RealEnclosure& alpha, const Int& q);

struct SimultaneousResult {
  std::vector<Int> p;
  Int q;
};
// Certified |alpha_j - p_j/q| < n/(n+1) q^(-1-1/n) for all j.
std::optional<bool> SimultaneousApproxHolds(const std::vector<Real>& alpha,
                                            const std::vector<Int>& p, const Int& q);
// Smallest q <= q_max that satisfies the bound with nearest-integer p_j.
// Throws Error(kBudget) when none exists.
SimultaneousResult SimultaneousApprox(const std::vector<Real>& alpha, const Int& q_max);

// --- Sums of squares ------------------------------------------------------

bool IsPrime(const Int& n);

struct TwoSquareResult {
  Int a;  // a <= b
  Int b;
  Int q;  // q^2 = -1 mod p
  bool wilson;  // q came from ((p-1)/2)! mod p
  TheoremCertificate certificate;
};
inline const Int kWilsonLimit = 100000;
// p prime, p = 1 mod 4; Error(kDomain) otherwise.
TwoSquareResult TwoSquare(const Int& p);

struct FourSquareResult {
  std::int64_t a, b, c, d;  // non-increasing
};
inline constexpr std::int64_t kFourSquareCap = 1'000'000'000;
FourSquareResult FourSquare(std::int64_t m);

// --- Quadratic forms and fields ------------------------------------------

struct FormMinimum {
  Rat min;
  IntVec witness;
  Rat gamma_power;       // min^n / D, the n-th power of the Hermite invariant
  Real minkowski_bound;  // (4/pi) Γ(n/2+1)^(2/n) D^(1/n)
  Real hermite_bound;    // (4/3)^((n-1)/2) D^(1/n)
  std::string minkowski_verdict;  // min vs minkowski_bound
  std::string hermite_verdict;    // min vs hermite_bound, decided exactly
};
FormMinimum FormFirstMinimum(const QuadraticForm& q, const EnumerateOptions& options = {});

// (4/pi)^r2 n!/n^n sqrt(|disc|).
Real MinkowskiFieldBound(int n, int r2, const Int& disc_abs);

// --- Successive minima relations ---------------------------------------

struct SecondTheoremCheck {
  SuccessiveMinima minima;
  Real product;  // prod lambda_j vol(C) / det
  Rat lower;     // 2^n / n!
  Rat upper;     // 2^n
  std::string lower_verdict;  // lower vs product
  std::string upper_verdict;  // product vs upper
};
SecondTheoremCheck CheckSecondTheorem(const Lattice& lattice, const ConvexBody& body,
                                      const EnumerateOptions& options = {});

// Least lambda at which the translates lambda C + z, z in the lattice,
// stop being pairwise disjoint, bracketed by bisection to relative width
// `tolerance`.
RealEnclosure OverlapDilation(const Lattice& lattice, const ConvexBody& body,
                              const Rat& tolerance, const EnumerateOptions& options = {});

}  // namespace gon
