#pragma once

// Full-rank lattices given by a rational basis (columns) or, for lattices
// without a rational embedding, by their Gram matrix alone.

#include <cstdint>
#include <optional>
#include <stop_token>
#include <vector>

#include "gon/body.hpp"
#include "gon/exact.hpp"
#include "gon/matrix.hpp"

namespace gon {

inline constexpr std::size_t kMinLatticeDim = 2;
inline constexpr std::size_t kMaxLatticeDim = 8;

struct LatticePoint {
  IntVec coeffs;
  RatVec ambient;  // empty for Gram-only lattices
  bool operator==(const LatticePoint&) const = default;
};

class Lattice {
 public:
  // Columns of `basis` are the basis vectors. Throws Error(kDimension) for
  // n outside 2..8 or a non-square matrix, Error(kDegenerateBasis) when
  // singular.
  static Lattice FromBasis(RatMatrix basis);
  // Lattice known only up to isometry. Throws Error(kDimension) or
  // Error(kDegenerateBasis) when gram is not positive definite.
  static Lattice FromGram(RatMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  bool has_basis() const { return basis_.has_value(); }
  // Throws Error(kUnsupported) for Gram-only lattices.
  const RatMatrix& basis() const;
  const RatMatrix& gram() const { return gram_; }
  // det(gram) = det_abs^2, always rational.
  const Rat& det_squared() const { return det_squared_; }
  // |det(z_1, ..., z_n)|; exact for rational bases.
  Real det_abs() const;
  std::optional<Rat> det_abs_exact() const;

  LatticePoint Point(const IntVec& coeffs) const;
  Rat Norm2(const IntVec& coeffs) const { return gram_.QuadraticValue(coeffs); }

 private:
  Lattice() = default;
  std::optional<RatMatrix> basis_;
  RatMatrix gram_;
  Rat det_squared_;
  std::optional<Rat> det_abs_;
};

struct Reduced2d {
  Lattice lattice;
  // New basis = old basis * transform; integer, determinant +-1.
  std::int64_t transform[2][2];
};
// Lagrange-Gauss reduction; requires dim 2.
Reduced2d Reduce2d(const Lattice& lattice);

struct EnumerateOptions {
  std::uint64_t max_points = 10'000'000;
  std::stop_token stop;
};

// All nonzero integer vectors m with m^T G m <= bound for a positive
// definite G, in lexicographic order. Throws Error(kBudget) when the
// predicted or actual count exceeds the cap or cancellation is requested.
std::vector<IntVec> EnumerateForm(const RatMatrix& gram, const Rat& bound,
                                  const EnumerateOptions& options = {});

// Nonzero lattice points with squared length <= r2, lexicographic.
std::vector<LatticePoint> EnumerateInBall(const Lattice& lattice, const Rat& r2,
                                          const EnumerateOptions& options = {});

struct MinimalVectors {
  Rat min_norm2;
  std::vector<LatticePoint> vectors;
};
MinimalVectors FindMinimalVectors(const Lattice& lattice,
                                  const EnumerateOptions& options = {});

// A convex body pulled back to lattice coefficients: gauge^2 of B m and a
// positive definite F' with {gauge^2 <= 1} inside {m^T F' m <= 1}.
class CoefficientBody {
 public:
  // Throws Error(kUnbounded) for unbounded bodies, Error(kDimension) on
  // mismatch and Error(kUnsupported) when a Gram-only lattice meets a body
  // other than a multiple of the Euclidean ball.
  CoefficientBody(const Lattice& lattice, const ConvexBody& body);

  Rat GaugeSquared(const IntVec& m) const;
  const RatMatrix& bounding_form() const { return bounding_; }

 private:
  std::optional<RatMatrix> basis_;
  RatMatrix gram_;
  ConvexBody body_;
  std::optional<Rat> ball_scale_;  // gauge^2 = scale * m^T G m (Gram-only)
  RatMatrix bounding_;
};

struct BodyPoint {
  LatticePoint point;
  Rat gauge2;
};
// Nonzero lattice points x with gauge^2(x) <= bound, lexicographic.
std::vector<BodyPoint> PointsInBody(const Lattice& lattice, const ConvexBody& body,
                                    const Rat& gauge2_bound,
                                    const EnumerateOptions& options = {});

struct SuccessiveMinima {
  RatVec lambda_squared;            // exact, nondecreasing
  std::vector<Real> lambda;         // sqrt of lambda_squared
  std::vector<LatticePoint> witnesses;  // linearly independent
};
// Exact: every gauge^2 value is rational, so the minima come from sorting
// the enumerated points and a greedy independence scan.
SuccessiveMinima ComputeSuccessiveMinima(const Lattice& lattice,
                                         const ConvexBody& body,
                                         const EnumerateOptions& options = {});

// Incremental rank tracking over the rationals.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dim) : dim_(dim) {}
  // Adds v if it is independent of the accepted vectors; returns whether it
  // was added.
  bool TryAdd(const IntVec& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<RatVec> rows_;  // echelon rows
  std::vector<std::size_t> pivots_;
};

}  // namespace gon
