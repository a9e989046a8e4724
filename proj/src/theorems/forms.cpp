#include <algorithm>

#include "gon/theorems.hpp"

namespace gon {

FormMinimum FormFirstMinimum(const QuadraticForm& q, const EnumerateOptions& options) {
  const long n = static_cast<long>(q.dim());
  const Lattice lattice = Lattice::FromGram(q.gram());
  const MinimalVectors mv = FindMinimalVectors(lattice, options);
  FormMinimum out;
  out.min = mv.min_norm2;
  // Of the minimal vectors, the positive representative with the largest
  // coefficients in lexicographic order.
  for (const LatticePoint& p : mv.vectors) {
    const auto first = std::find_if(p.coeffs.begin(), p.coeffs.end(),
                                    [](std::int64_t c) { return c != 0; });
    if (*first < 0) continue;
    if (out.witness.empty() || out.witness < p.coeffs) out.witness = p.coeffs;
  }
  const Rat d = q.determinant();
  out.gamma_power = Pow(out.min, n) / d;

  out.minkowski_bound = Real(4) / Real::Pi() *
                        Real::Pow(GammaHalf(n + 2), Frac(2, n)) *
                        Real::Pow(Real(d), Frac(1, n));
  out.minkowski_verdict = CompareVerdict(Real(out.min), out.minkowski_bound);

  // min <= (4/3)^((n-1)/2) D^(1/n)  <=>  min^(2n) <= (4/3)^(n(n-1)) D^2.
  const Rat rhs = Pow(Rat(4, 3), n * (n - 1)) * d * d;
  out.hermite_bound = Real::Pow(Real(rhs), Frac(1, 2 * n));
  const Rat lhs = Pow(out.min, 2 * n);
  out.hermite_verdict = lhs < rhs ? "holds" : (lhs == rhs ? "equal" : "fails");
  return out;
}

Real MinkowskiFieldBound(int n, int r2, const Int& disc_abs) {
  if (n < 2 || r2 < 0 || 2 * r2 > n) {
    throw Error(ErrorKind::kDomain, "need n >= 2 and 0 <= 2 r2 <= n");
  }
  if (disc_abs < 1) throw Error(ErrorKind::kDomain, "discriminant must be nonzero");
  Rat ratio = 1;
  for (long k = 1; k <= n; ++k) ratio *= Frac(k, n);
  return Real::Pow(Real(4) / Real::Pi(), Rat(r2)) * Real(ratio) *
         Real::Sqrt(Real(Rat(disc_abs)));
}

}  // namespace gon
