#include <algorithm>
#include <utility>

#include "gon/body.hpp"

namespace gon {

QuadraticForm::QuadraticForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) {
    throw Error(ErrorKind::kDomain, "quadratic form needs a square matrix");
  }
  if (!gram_.IsPositiveDefinite()) {
    throw Error(ErrorKind::kDomain,
                "quadratic form is not positive definite: " + gram_.ToString());
  }
  det_ = gram_.Determinant();
}

std::string_view ToString(Membership m) {
  switch (m) {
    case Membership::kInside:
      return "inside";
    case Membership::kBoundary:
      return "boundary";
    case Membership::kOutside:
      return "outside";
  }
  return "outside";
}

ConvexBody ConvexBody::Box(RatVec halfwidths) {
  if (halfwidths.empty()) throw Error(ErrorKind::kDimension, "empty box");
  for (const Rat& h : halfwidths) {
    if (h <= 0) throw Error(ErrorKind::kDomain, "box half-widths must be positive");
  }
  const std::size_t n = halfwidths.size();
  return ConvexBody(AxisBox{std::move(halfwidths)}, n);
}

ConvexBody ConvexBody::Cube(std::size_t n, const Rat& halfwidth) {
  return Box(RatVec(n, halfwidth));
}

ConvexBody ConvexBody::Forms(RatMatrix a, RatVec lambda) {
  if (!a.square() || a.rows() != lambda.size() || lambda.empty()) {
    throw Error(ErrorKind::kDimension, "forms box needs n forms in n variables");
  }
  for (const Rat& l : lambda) {
    if (l <= 0) throw Error(ErrorKind::kDomain, "forms box bounds must be positive");
  }
  const std::size_t n = lambda.size();
  return ConvexBody(FormsBox{std::move(a), std::move(lambda)}, n);
}

ConvexBody ConvexBody::Ball(std::size_t n, const Rat& radius_squared) {
  return EllipsoidBody(QuadraticForm(RatMatrix::Identity(n)), radius_squared);
}

ConvexBody ConvexBody::EllipsoidBody(const QuadraticForm& q, const Rat& level) {
  if (level <= 0) throw Error(ErrorKind::kDomain, "ellipsoid level must be positive");
  return ConvexBody(Ellipsoid{q.gram(), level}, q.dim());
}

ConvexBody ConvexBody::Polytope(const std::vector<RatVec>& vertices) {
  std::vector<Point2> pts;
  for (const RatVec& v : vertices) {
    if (v.size() != 2) {
      throw Error(ErrorKind::kDimension, "symmetric polytopes are planar only");
    }
    pts.push_back({v[0], v[1]});
  }
  for (const Point2& p : pts) {
    if (std::find(pts.begin(), pts.end(), Point2{-p.x, -p.y}) == pts.end()) {
      throw Error(ErrorKind::kDomain, "polytope vertices not closed under negation");
    }
  }
  Polygon hull = ConvexHull(pts);
  if (hull.size() < 3) throw Error(ErrorKind::kDomain, "polytope has empty interior");
  SymPolytope poly;
  for (const Point2& p : hull) poly.vertices.push_back({p.x, p.y});
  return ConvexBody(std::move(poly), 2);
}

bool ConvexBody::bounded() const {
  if (const auto* f = std::get_if<FormsBox>(&shape_)) return f->a.Determinant() != 0;
  return true;
}

std::string ConvexBody::kind() const {
  switch (shape_.index()) {
    case 0:
      return "axisbox";
    case 1:
      return "formsbox";
    case 2:
      return "ellipsoid";
    default:
      return "polytope";
  }
}

namespace {

Rat MaxRatioSquared(const RatVec& values, const RatVec& bounds) {
  Rat best = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rat r = values[i] / bounds[i];
    best = std::max(best, Rat(r * r));
  }
  return best;
}

}  // namespace

Rat ConvexBody::GaugeSquared(const RatVec& x) const {
  if (x.size() != dim_) {
    throw Error(ErrorKind::kDimension, "point dimension does not match body");
  }
  return std::visit(
      [&](const auto& s) -> Rat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AxisBox>) {
          return MaxRatioSquared(x, s.halfwidths);
        } else if constexpr (std::is_same_v<T, FormsBox>) {
          return MaxRatioSquared(s.a * x, s.lambda);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return s.q.QuadraticValue(x) / s.level;
        } else {
          // Facet k: outward normal n_k with n_k . v = c_k > 0 along the edge.
          Rat best = 0;
          const auto& v = s.vertices;
          for (std::size_t i = 0; i < v.size(); ++i) {
            const RatVec& a = v[i];
            const RatVec& b = v[(i + 1) % v.size()];
            const Rat nx = b[1] - a[1];
            const Rat ny = a[0] - b[0];
            const Rat c = nx * a[0] + ny * a[1];
            best = std::max(best, Rat((nx * x[0] + ny * x[1]) / c));
          }
          return best * best;
        }
      },
      shape_);
}

Membership ConvexBody::Classify(const RatVec& x) const {
  const Rat g = GaugeSquared(x);
  if (g < 1) return Membership::kInside;
  if (g == 1) return Membership::kBoundary;
  return Membership::kOutside;
}

Membership Classify(const ConvexBody& body, const RatVec& x) {
  return body.Classify(x);
}

RatMatrix ConvexBody::BoundingForm() const {
  const Rat n(static_cast<long>(dim_));
  return std::visit(
      [&](const auto& s) -> RatMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AxisBox>) {
          RatVec diag;
          for (const Rat& h : s.halfwidths) diag.push_back(1 / (n * h * h));
          return RatMatrix::Diagonal(diag);
        } else if constexpr (std::is_same_v<T, FormsBox>) {
          if (s.a.Determinant() == 0) {
            throw Error(ErrorKind::kUnbounded, "forms box with singular matrix");
          }
          RatVec diag;
          for (const Rat& l : s.lambda) diag.push_back(1 / (n * l * l));
          return s.a.Transpose() * RatMatrix::Diagonal(diag) * s.a;
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return s.q * (1 / s.level);
        } else {
          Rat r2 = 0;
          for (const RatVec& v : s.vertices) r2 = std::max(r2, Rat(Dot(v, v)));
          return RatMatrix::Identity(2) * (1 / r2);
        }
      },
      shape_);
}

Real ConvexBody::Volume() const {
  const long n = static_cast<long>(dim_);
  const Rat two_n = Pow(Rat(2), n);
  return std::visit(
      [&](const auto& s) -> Real {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AxisBox>) {
          Rat v = two_n;
          for (const Rat& h : s.halfwidths) v *= h;
          return Real(v);
        } else if constexpr (std::is_same_v<T, FormsBox>) {
          const Rat det = s.a.Determinant();
          if (det == 0) {
            throw Error(ErrorKind::kUnbounded, "forms box with singular matrix");
          }
          Rat v = two_n / Abs(det);
          for (const Rat& l : s.lambda) v *= l;
          return Real(v);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          // level^(n/2) pi^(n/2) / (Γ(n/2+1) sqrt(det Q))
          const Real scale = Real::Pow(Real(Rat(Pow(s.level, n) / s.q.Determinant())),
                                       Rat(1, 2));
          return scale * UnitBallVolume(static_cast<int>(n));
        } else {
          Polygon p;
          for (const RatVec& v : s.vertices) p.push_back({v[0], v[1]});
          return Real(SignedArea(p));
        }
      },
      shape_);
}

ConvexBody ConvexBody::Scale(const Rat& factor) const {
  if (factor <= 0) throw Error(ErrorKind::kDomain, "scale factor must be positive");
  return std::visit(
      [&](const auto& s) -> ConvexBody {
        using T = std::decay_t<decltype(s)>;
        T out = s;
        if constexpr (std::is_same_v<T, AxisBox>) {
          for (Rat& h : out.halfwidths) h *= factor;
        } else if constexpr (std::is_same_v<T, FormsBox>) {
          for (Rat& l : out.lambda) l *= factor;
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          out.level *= factor * factor;
        } else {
          for (RatVec& v : out.vertices) {
            for (Rat& c : v) c *= factor;
          }
        }
        return ConvexBody(std::move(out), dim_);
      },
      shape_);
}

}  // namespace gon
