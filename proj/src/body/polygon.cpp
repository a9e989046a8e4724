#include <algorithm>
#include <utility>

#include "gon/body.hpp"

namespace gon {

Rat Cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat SignedArea(const Polygon& p) {
  Rat twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p[(i + 1) % p.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2;
}

Polygon ConvexHull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  Polygon hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Point2& p = points[i];
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool IsConvexCcw(const Polygon& p) {
  if (p.size() < 3) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (Cross(p[i], p[(i + 1) % p.size()], p[(i + 2) % p.size()]) <= 0) {
      return false;
    }
  }
  // Left turns everywhere still admit star polygons winding twice.
  return ConvexHull(p).size() == p.size();
}

void RequireConvex(const Polygon& p) {
  if (p.size() < 3 || SignedArea(p) == 0) {
    throw Error(ErrorKind::kDegenerate, "polygon has empty interior");
  }
  if (!IsConvexCcw(p)) {
    throw Error(ErrorKind::kNonConvex,
                "polygon is not strictly convex in counter-clockwise order");
  }
}

namespace {

// Rotate so the lowest (then leftmost) vertex comes first.
Polygon StartAtBottom(const Polygon& p) {
  auto it = std::min_element(p.begin(), p.end(), [](const Point2& a, const Point2& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  Polygon out(it, p.end());
  out.insert(out.end(), p.begin(), it);
  return out;
}

Point2 Edge(const Polygon& p, std::size_t i) {
  const Point2& a = p[i % p.size()];
  const Point2& b = p[(i + 1) % p.size()];
  return {b.x - a.x, b.y - a.y};
}

}  // namespace

Polygon MinkowskiSum2d(const Polygon& p_in, const Polygon& q_in) {
  RequireConvex(p_in);
  RequireConvex(q_in);
  const Polygon p = StartAtBottom(p_in);
  const Polygon q = StartAtBottom(q_in);
  Polygon sum;
  std::size_t i = 0;
  std::size_t j = 0;
  // Edges of both polygons are merged in order of polar angle.
  while (i < p.size() || j < q.size()) {
    sum.push_back({p[i % p.size()].x + q[j % q.size()].x,
                   p[i % p.size()].y + q[j % q.size()].y});
    const Point2 ep = Edge(p, i);
    const Point2 eq = Edge(q, j);
    const Rat turn = ep.x * eq.y - ep.y * eq.x;
    if (j == q.size() || (i < p.size() && turn > 0)) {
      ++i;
    } else if (i == p.size() || turn < 0) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  // Drop vertices made collinear by parallel edges.
  Polygon out;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    const Point2& prev = sum[(k + sum.size() - 1) % sum.size()];
    const Point2& next = sum[(k + 1) % sum.size()];
    if (Cross(prev, sum[k], next) != 0) out.push_back(sum[k]);
  }
  return out;
}

Polygon ScalePolygon(const Polygon& p, const Rat& factor) {
  Polygon out = p;
  for (Point2& v : out) {
    v.x *= factor;
    v.y *= factor;
  }
  return out;
}

BrunnMinkowskiResult BrunnMinkowskiCheck2d(const Polygon& p, const Polygon& q,
                                           const Rat& lambda) {
  if (lambda < 0 || lambda > 1) {
    throw Error(ErrorKind::kDomain, "lambda must lie in [0, 1]");
  }
  RequireConvex(p);
  RequireConvex(q);
  const Rat mu = 1 - lambda;
  Rat area_sum;
  if (lambda == 0) {
    area_sum = SignedArea(q);
  } else if (mu == 0) {
    area_sum = SignedArea(p);
  } else {
    area_sum = SignedArea(MinkowskiSum2d(ScalePolygon(p, lambda), ScalePolygon(q, mu)));
  }
  const Rat area_p = SignedArea(p);
  const Rat area_q = SignedArea(q);

  BrunnMinkowskiResult result;
  const Rat width = Pow(Rat(10), -30);
  result.lhs = Real::Sqrt(Real(area_sum)).Enclose(width);
  result.rhs = (Real(lambda) * Real::Sqrt(Real(area_p)) +
                Real(mu) * Real::Sqrt(Real(area_q)))
                   .Enclose(width);
  // lhs^2 - rhs^2 = D - E sqrt(area_p area_q) with D, E rational, E >= 0.
  const Rat d = area_sum - lambda * lambda * area_p - mu * mu * area_q;
  const Rat e = 2 * lambda * mu;
  const Rat e2_prod = e * e * area_p * area_q;
  if (d < 0) {
    result.holds = false;
  } else {
    const Rat d2 = d * d;
    result.holds = d2 >= e2_prod;
    result.equality = d2 == e2_prod;
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

using I128 = __int128;

I128 Cross(const LatticePoint2& o, const LatticePoint2& a, const LatticePoint2& b) {
  return static_cast<I128>(a.x - o.x) * (b.y - o.y) -
         static_cast<I128>(a.y - o.y) * (b.x - o.x);
}

int Sign(I128 v) { return (v > 0) - (v < 0); }

bool OnSegment(const LatticePoint2& a, const LatticePoint2& b, const LatticePoint2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool SegmentsTouch(const LatticePoint2& a, const LatticePoint2& b,
                   const LatticePoint2& c, const LatticePoint2& d) {
  const int d1 = Sign(Cross(c, d, a));
  const int d2 = Sign(Cross(c, d, b));
  const int d3 = Sign(Cross(a, b, c));
  const int d4 = Sign(Cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && OnSegment(c, d, a)) return true;
  if (d2 == 0 && OnSegment(c, d, b)) return true;
  if (d3 == 0 && OnSegment(a, b, c)) return true;
  if (d4 == 0 && OnSegment(a, b, d)) return true;
  return false;
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint2> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorKind::kDegenerate, "polygon needs three vertices");
  I128 twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    twice += static_cast<I128>(a.x) * b.y - static_cast<I128>(a.y) * b.x;
  }
  if (twice == 0) throw Error(ErrorKind::kDegenerate, "polygon has zero area");
  if (twice < 0) std::reverse(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    const auto& c = vertices_[(i + 2) % n];
    if (a == b) throw Error(ErrorKind::kDegenerate, "repeated vertex");
    // Adjacent edges folding back onto each other.
    if (Cross(a, b, c) == 0 &&
        static_cast<I128>(b.x - a.x) * (c.x - b.x) +
                static_cast<I128>(b.y - a.y) * (c.y - b.y) <
            0) {
      throw Error(ErrorKind::kDegenerate, "polygon boundary folds back");
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (SegmentsTouch(a, b, vertices_[j], vertices_[(j + 1) % n])) {
        throw Error(ErrorKind::kDegenerate, "polygon boundary self-intersects");
      }
    }
  }
}

Rat LatticePolygon::Area() const { return SignedArea(ToPolygon()); }

bool LatticePolygon::IsConvex() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (Cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) < 0) {
      return false;
    }
  }
  return true;
}

Polygon LatticePolygon::ToPolygon() const {
  Polygon p;
  for (const auto& v : vertices_) {
    p.push_back({Rat(static_cast<long>(v.x)), Rat(static_cast<long>(v.y))});
  }
  return p;
}

}  // namespace gon
