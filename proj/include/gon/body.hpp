#pragma once

// Symmetric convex bodies, positive definite quadratic forms and planar
// polygons. All classifications are exact.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gon/exact.hpp"
#include "gon/matrix.hpp"

namespace gon {

// Symmetric positive definite rational form x^T G x.
class QuadraticForm {
 public:
  // Throws Error(kDomain) unless gram is symmetric positive definite.
  explicit QuadraticForm(RatMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  const Rat& determinant() const { return det_; }
  Rat operator()(const RatVec& x) const { return gram_.QuadraticValue(x); }
  Rat operator()(const IntVec& x) const { return gram_.QuadraticValue(x); }

 private:
  RatMatrix gram_;
  Rat det_;
};

struct AxisBox {
  RatVec halfwidths;  // |x_i| <= h_i
};

struct FormsBox {
  RatMatrix a;     // rows are the forms Y_j
  RatVec lambda;   // |Y_j(x)| <= lambda_j
};

struct Ellipsoid {
  RatMatrix q;  // positive definite
  Rat level;    // q(x) <= level
};

struct SymPolytope {
  std::vector<RatVec> vertices;  // planar, counter-clockwise, closed under negation
};

enum class Membership { kInside, kBoundary, kOutside };
std::string_view ToString(Membership m);

class ConvexBody {
 public:
  using Variant = std::variant<AxisBox, FormsBox, Ellipsoid, SymPolytope>;

  // Validating factories; violations raise Error(kDomain).
  static ConvexBody Box(RatVec halfwidths);
  static ConvexBody Cube(std::size_t n, const Rat& halfwidth);
  static ConvexBody Forms(RatMatrix a, RatVec lambda);
  static ConvexBody Ball(std::size_t n, const Rat& radius_squared = Rat(1));
  static ConvexBody EllipsoidBody(const QuadraticForm& q, const Rat& level);
  // Vertices are reduced to their convex hull; must be closed under negation.
  static ConvexBody Polytope(const std::vector<RatVec>& vertices);

  const Variant& shape() const { return shape_; }
  std::size_t dim() const { return dim_; }
  bool bounded() const;
  std::string kind() const;

  // inf{t^2 : x in tC}; exact. For an unbounded FormsBox the gauge may vanish
  // on nonzero x.
  Rat GaugeSquared(const RatVec& x) const;
  Membership Classify(const RatVec& x) const;

  // Positive definite F with C contained in {x : x^T F x <= 1}.
  // Throws Error(kUnbounded) for an unbounded body.
  RatMatrix BoundingForm() const;

  // Throws Error(kUnbounded) for an unbounded body.
  Real Volume() const;
  ConvexBody Scale(const Rat& factor) const;

 private:
  ConvexBody(Variant shape, std::size_t dim) : shape_(std::move(shape)), dim_(dim) {}
  Variant shape_;
  std::size_t dim_;
};

// Exact point classification; dimension mismatch raises Error(kDimension).
Membership Classify(const ConvexBody& body, const RatVec& x);

// ---------------------------------------------------------------------------
// Planar polygons.

struct Point2 {
  Rat x;
  Rat y;
  bool operator==(const Point2&) const = default;
};

using Polygon = std::vector<Point2>;  // counter-clockwise

Rat Cross(const Point2& o, const Point2& a, const Point2& b);
// Shoelace area, positive for counter-clockwise order.
Rat SignedArea(const Polygon& p);
// Convex hull, counter-clockwise, without collinear vertices.
Polygon ConvexHull(std::vector<Point2> points);
// Strictly convex, counter-clockwise, non-degenerate.
bool IsConvexCcw(const Polygon& p);
// Throws Error(kDegenerate) for fewer than three non-collinear vertices and
// Error(kNonConvex) for a reflex or clockwise vertex.
void RequireConvex(const Polygon& p);

Polygon MinkowskiSum2d(const Polygon& p, const Polygon& q);
Polygon ScalePolygon(const Polygon& p, const Rat& factor);

struct BrunnMinkowskiResult {
  RealEnclosure lhs;  // area(lam P + (1 - lam) Q)^(1/2)
  RealEnclosure rhs;  // lam area(P)^(1/2) + (1 - lam) area(Q)^(1/2)
  bool holds = false;
  bool equality = false;
};
// Decided exactly by isolating the single square root and squaring.
BrunnMinkowskiResult BrunnMinkowskiCheck2d(const Polygon& p, const Polygon& q,
                                           const Rat& lambda);

struct LatticePoint2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const LatticePoint2&) const = default;
};

// Simple lattice polygon with nonzero area, stored counter-clockwise.
class LatticePolygon {
 public:
  // Clockwise input is reversed. Throws Error(kDegenerate) for zero area or
  // a self-intersecting boundary.
  explicit LatticePolygon(std::vector<LatticePoint2> vertices);

  const std::vector<LatticePoint2>& vertices() const { return vertices_; }
  Rat Area() const;
  bool IsConvex() const;
  Polygon ToPolygon() const;

 private:
  std::vector<LatticePoint2> vertices_;
};

}  // namespace gon
