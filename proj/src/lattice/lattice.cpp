#include "gon/lattice.hpp"

#include <algorithm>
#include <utility>

namespace gon {
namespace {

void CheckDim(std::size_t n) {
  if (n < kMinLatticeDim || n > kMaxLatticeDim) {
    throw Error(ErrorKind::kDimension,
                "lattice dimension must lie in 2..8, got " + std::to_string(n));
  }
}

}  // namespace

Lattice Lattice::FromBasis(RatMatrix basis) {
  if (!basis.square()) throw Error(ErrorKind::kDimension, "basis must be square");
  CheckDim(basis.rows());
  const Rat det = basis.Determinant();
  if (det == 0) {
    throw Error(ErrorKind::kDegenerateBasis, "basis columns are linearly dependent");
  }
  Lattice l;
  l.gram_ = basis.Transpose() * basis;
  l.basis_ = std::move(basis);
  l.det_abs_ = Abs(det);
  l.det_squared_ = det * det;
  return l;
}

Lattice Lattice::FromGram(RatMatrix gram) {
  if (!gram.square()) throw Error(ErrorKind::kDimension, "Gram matrix must be square");
  CheckDim(gram.rows());
  if (!gram.IsPositiveDefinite()) {
    throw Error(ErrorKind::kDegenerateBasis,
                "Gram matrix is not symmetric positive definite");
  }
  Lattice l;
  l.det_squared_ = gram.Determinant();
  l.gram_ = std::move(gram);
  if (auto root = Real::Sqrt(Real(l.det_squared_)).exact()) l.det_abs_ = *root;
  return l;
}

const RatMatrix& Lattice::basis() const {
  if (!basis_) {
    throw Error(ErrorKind::kUnsupported, "lattice is given by its Gram matrix only");
  }
  return *basis_;
}

Real Lattice::det_abs() const {
  if (det_abs_) return Real(*det_abs_);
  return Real::Sqrt(Real(det_squared_));
}

std::optional<Rat> Lattice::det_abs_exact() const { return det_abs_; }

LatticePoint Lattice::Point(const IntVec& coeffs) const {
  if (coeffs.size() != dim()) {
    throw Error(ErrorKind::kDimension, "coefficient vector has wrong length");
  }
  LatticePoint p{coeffs, {}};
  if (basis_) p.ambient = *basis_ * coeffs;
  return p;
}

Reduced2d Reduce2d(const Lattice& lattice) {
  if (lattice.dim() != 2) {
    throw Error(ErrorKind::kDimension, "Lagrange-Gauss reduction needs dim 2");
  }
  const RatMatrix& g = lattice.gram();
  // Columns of u express the current basis in the original one.
  std::int64_t u[2][2] = {{1, 0}, {0, 1}};
  auto entry = [&](int a, int b) {
    // (u_a)^T G (u_b) for columns a, b of u.
    Rat s = 0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        s += Rat(static_cast<long>(u[i][a] * u[j][b])) * g(i, j);
      }
    }
    return s;
  };
  for (;;) {
    Rat g11 = entry(0, 0);
    Rat g22 = entry(1, 1);
    if (g22 < g11) {
      for (auto& row : u) std::swap(row[0], row[1]);
      continue;
    }
    const Int mu = Floor(entry(0, 1) / g11 + Rat(1, 2));
    if (mu == 0) break;
    const std::int64_t m = ToInt64(mu);
    for (auto& row : u) row[1] -= m * row[0];
  }
  if (u[0][0] * u[1][1] - u[0][1] * u[1][0] < 0) {
    for (auto& row : u) row[1] = -row[1];
  }
  RatMatrix t(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) t(i, j) = Rat(static_cast<long>(u[i][j]));
  }
  Lattice reduced = lattice.has_basis()
                        ? Lattice::FromBasis(lattice.basis() * t)
                        : Lattice::FromGram(t.Transpose() * g * t);
  Reduced2d out{std::move(reduced), {{u[0][0], u[0][1]}, {u[1][0], u[1][1]}}};
  return out;
}

namespace {

class FinckePohst {
 public:
  FinckePohst(const RatMatrix& gram, const EnumerateOptions& options)
      : factor_(Decompose(gram)), options_(options), m_(gram.rows(), 0) {}

  std::vector<IntVec> Run(const Rat& bound) {
    const std::size_t n = m_.size();
    Recurse(n - 1, bound);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void Recurse(std::size_t j, const Rat& remaining) {
    if (++nodes_ % 4096 == 0 && options_.stop.stop_requested()) {
      throw Error(ErrorKind::kBudget, "enumeration cancelled");
    }
    if (nodes_ > 50 * options_.max_points + 1'000'000) {
      throw Error(ErrorKind::kBudget, "enumeration node budget exhausted");
    }
    const std::size_t n = m_.size();
    Rat c = 0;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m_[i] != 0) c -= factor_.l(i, j) * Rat(static_cast<long>(m_[i]));
    }
    const Rat t = remaining / factor_.d[j];
    // Integer m with (m - c)^2 <= t; the integer square root bounds the
    // range to within one step, exact checks settle the ends.
    const Int s = ISqrt(Floor(t));
    Int lo = Floor(c) - s - 1;
    Int hi = Ceil(c) + s + 1;
    auto fits = [&](const Int& v) {
      const Rat diff = Rat(v) - c;
      return diff * diff <= t;
    };
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    for (Int v = lo; v <= hi; ++v) {
      const Rat diff = Rat(v) - c;
      const Rat rest = remaining - factor_.d[j] * diff * diff;
      m_[j] = ToInt64(v);
      if (j == 0) {
        if (std::any_of(m_.begin(), m_.end(), [](std::int64_t x) { return x != 0; })) {
          found_.push_back(m_);
          if (found_.size() > options_.max_points) {
            throw Error(ErrorKind::kBudget, "enumeration exceeds point budget");
          }
        }
      } else {
        Recurse(j - 1, rest);
      }
    }
    m_[j] = 0;
  }

  Ldlt factor_;
  const EnumerateOptions& options_;
  IntVec m_;
  std::vector<IntVec> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<IntVec> EnumerateForm(const RatMatrix& gram, const Rat& bound,
                                  const EnumerateOptions& options) {
  if (bound <= 0) return {};
  const std::size_t n = gram.rows();
  // Predicted count ~ vol{m^T G m <= bound} = V_n sqrt(bound^n / det G).
  const Real predicted =
      UnitBallVolume(static_cast<int>(n)) *
      Real::Sqrt(Real(Rat(Pow(bound, static_cast<long>(n)) / gram.Determinant())));
  if (predicted.Eval(32).lo() > Rat(Int(std::to_string(options.max_points), 10))) {
    throw Error(ErrorKind::kBudget,
                "predicted enumeration size exceeds the point budget");
  }
  return FinckePohst(gram, options).Run(bound);
}

std::vector<LatticePoint> EnumerateInBall(const Lattice& lattice, const Rat& r2,
                                          const EnumerateOptions& options) {
  if (r2 <= 0) throw Error(ErrorKind::kDomain, "radius squared must be positive");
  std::vector<LatticePoint> out;
  for (const IntVec& m : EnumerateForm(lattice.gram(), r2, options)) {
    out.push_back(lattice.Point(m));
  }
  return out;
}

MinimalVectors FindMinimalVectors(const Lattice& lattice,
                                  const EnumerateOptions& options) {
  Rat bound = lattice.gram()(0, 0);
  for (std::size_t i = 1; i < lattice.dim(); ++i) {
    bound = std::min(bound, lattice.gram()(i, i));
  }
  std::vector<IntVec> candidates = EnumerateForm(lattice.gram(), bound, options);
  MinimalVectors out;
  out.min_norm2 = bound;
  for (const IntVec& m : candidates) {
    out.min_norm2 = std::min(out.min_norm2, lattice.Norm2(m));
  }
  for (const IntVec& m : candidates) {
    if (lattice.Norm2(m) == out.min_norm2) out.vectors.push_back(lattice.Point(m));
  }
  return out;
}

CoefficientBody::CoefficientBody(const Lattice& lattice, const ConvexBody& body)
    : gram_(lattice.gram()), body_(body) {
  if (body.dim() != lattice.dim()) {
    throw Error(ErrorKind::kDimension, "body and lattice dimensions differ");
  }
  if (lattice.has_basis()) {
    basis_ = lattice.basis();
    bounding_ = basis_->Transpose() * body.BoundingForm() * *basis_;
    return;
  }
  const auto* e = std::get_if<Ellipsoid>(&body.shape());
  const bool scalar = e != nullptr && e->q == RatMatrix::Identity(e->q.rows()) * e->q(0, 0);
  if (!scalar) {
    throw Error(ErrorKind::kUnsupported,
                "a Gram-only lattice supports only Euclidean balls, not " + body.kind());
  }
  ball_scale_ = e->q(0, 0) / e->level;
  bounding_ = gram_ * *ball_scale_;
}

Rat CoefficientBody::GaugeSquared(const IntVec& m) const {
  if (ball_scale_) return *ball_scale_ * gram_.QuadraticValue(m);
  return body_.GaugeSquared(*basis_ * m);
}

std::vector<BodyPoint> PointsInBody(const Lattice& lattice, const ConvexBody& body,
                                    const Rat& gauge2_bound,
                                    const EnumerateOptions& options) {
  CoefficientBody coeff(lattice, body);
  std::vector<BodyPoint> out;
  for (const IntVec& m : EnumerateForm(coeff.bounding_form(), gauge2_bound, options)) {
    Rat g = coeff.GaugeSquared(m);
    if (g <= gauge2_bound) out.push_back({lattice.Point(m), std::move(g)});
  }
  return out;
}

bool IndependenceTracker::TryAdd(const IntVec& v) {
  if (v.size() != dim_) throw Error(ErrorKind::kDimension, "vector length mismatch");
  RatVec r = ToRat(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat f = r[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) r[i] -= f * rows_[k][i];
  }
  auto it = std::find_if(r.begin(), r.end(), [](const Rat& x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  const Rat scale = r[pivot];
  for (Rat& x : r) x /= scale;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

namespace {

// Canonical representative of +-x: first nonzero coordinate positive.
bool IsPositiveRepresentative(const RatVec& x) {
  for (const Rat& c : x) {
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

SuccessiveMinima ComputeSuccessiveMinima(const Lattice& lattice,
                                         const ConvexBody& body,
                                         const EnumerateOptions& options) {
  if (!body.bounded()) {
    throw Error(ErrorKind::kUnbounded, "successive minima need a bounded body");
  }
  const std::size_t n = lattice.dim();
  CoefficientBody coeff(lattice, body);
  Rat lo_bound, hi_bound;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    const Rat g = coeff.GaugeSquared(e);
    if (i == 0 || g < lo_bound) lo_bound = g;
    if (i == 0 || g > hi_bound) hi_bound = g;
  }
  Rat bound = lo_bound;
  for (;;) {
    std::vector<BodyPoint> pts = PointsInBody(lattice, body, bound, options);
    // Ties break on ambient coordinates when a basis exists, coefficients
    // otherwise; one of +-x is kept and larger coordinates come first.
    auto coords = [&](const BodyPoint& p) {
      return lattice.has_basis() ? p.point.ambient : ToRat(p.point.coeffs);
    };
    std::vector<BodyPoint> half;
    for (BodyPoint& p : pts) {
      if (IsPositiveRepresentative(coords(p))) half.push_back(std::move(p));
    }
    std::stable_sort(half.begin(), half.end(), [&](const BodyPoint& a, const BodyPoint& b) {
      if (a.gauge2 != b.gauge2) return a.gauge2 < b.gauge2;
      return coords(b) < coords(a);
    });
    SuccessiveMinima out;
    IndependenceTracker tracker(n);
    for (const BodyPoint& p : half) {
      if (tracker.TryAdd(p.point.coeffs)) {
        out.lambda_squared.push_back(p.gauge2);
        out.lambda.push_back(Real::Sqrt(Real(p.gauge2)));
        out.witnesses.push_back(p.point);
        if (tracker.rank() == n) return out;
      }
    }
    if (bound >= hi_bound) {
      throw Error(ErrorKind::kDomain, "basis vectors failed to span the lattice");
    }
    bound = std::min(Rat(bound * 4), hi_bound);
  }
}

}  // namespace gon
