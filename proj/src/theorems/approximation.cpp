#include <algorithm>

#include "gon/theorems.hpp"

namespace gon {
namespace {

Int Nearest(const Rat& x) { return Floor(x + Rat(1, 2)); }

struct Candidate {
  Int x;
  Int y;
  RealEnclosure error;
};

// Best y by smallest upper end of |y alpha - x|; `separated` reports whether
// that upper end lies strictly below every other lower end.
Candidate PickBest(const RealEnclosure& alpha, const Int& q, bool& separated) {
  std::vector<Candidate> all;
  const Rat mid = alpha.midpoint();
  for (Int y = 1; y <= q; ++y) {
    Int x = Nearest(Rat(y) * mid);
    RealEnclosure err = Abs(RealEnclosure(Rat(y)) * alpha - RealEnclosure(Rat(x)));
    all.push_back({std::move(x), y, std::move(err)});
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].error.hi() < all[best].error.hi()) best = i;
  }
  separated = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == best) continue;
    const bool exact_tie = all[i].error.is_exact() && all[best].error.is_exact() &&
                           all[i].error.lo() == all[best].error.lo();
    if (!exact_tie && all[i].error.lo() <= all[best].error.hi()) separated = false;
  }
  return all[best];
}

DirichletResult Certify(Candidate c, const Int& q) {
  if (!(c.error.hi() < Frac(1, q))) {
    throw Error(ErrorKind::kPrecision, "enclosure too wide to certify |y alpha - x| < 1/Q");
  }
  return {std::move(c.x), std::move(c.y), std::move(c.error)};
}

void CheckQ(const Int& q) {
  if (q < 2) throw Error(ErrorKind::kDomain, "Q must be at least 2");
}

}  // namespace

DirichletResult Dirichlet1d(const Real& alpha, const Int& q) {
  CheckQ(q);
  Rat width = Frac(1, Int(1000) * q * q * q);
  RealEnclosure enc = alpha.Enclose(width);
  bool separated = false;
  Candidate best = PickBest(enc, q, separated);
  for (int round = 0; round < 6 && !separated; ++round) {
    width /= Pow(Rat(2), 64);
    enc = alpha.Refine(enc, width);
    best = PickBest(enc, q, separated);
  }
  return Certify(std::move(best), q);
}

DirichletResult Dirichlet1d(const RealEnclosure& alpha, const Int& q) {
  CheckQ(q);
  if (!(alpha.width() < Frac(1, Int(1000) * q * q))) {
    throw Error(ErrorKind::kPrecision, "enclosure of alpha must be narrower than 10^-3/Q^2");
  }
  bool separated = false;
  return Certify(PickBest(alpha, q, separated), q);
}

std::optional<bool> SimultaneousApproxHolds(const std::vector<Real>& alpha,
                                            const std::vector<Int>& p, const Int& q) {
  if (alpha.empty() || p.size() != alpha.size()) {
    throw Error(ErrorKind::kDimension, "alpha and p must have equal nonzero length");
  }
  if (q < 1) throw Error(ErrorKind::kDomain, "q must be positive");
  const long n = static_cast<long>(alpha.size());
  // |q alpha - p| < K with K^n = (n/(n+1))^n / q.
  const Real k = Real::Pow(Real(Rat(Pow(Frac(n, n + 1), n) / Rat(q))), Frac(1, n));
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const Real d = Real(Rat(q)) * alpha[j] - Real(Rat(p[j]));
    const auto upper = CertifiedLess(d, k);
    const auto lower = CertifiedLess(-k, d);
    if (!upper || !lower) return std::nullopt;
    if (!*upper || !*lower) return false;
  }
  return true;
}

SimultaneousResult SimultaneousApprox(const std::vector<Real>& alpha, const Int& q_max) {
  if (alpha.empty()) throw Error(ErrorKind::kDimension, "alpha must be nonempty");
  if (q_max < 1) throw Error(ErrorKind::kDomain, "q_max must be positive");
  const long n = static_cast<long>(alpha.size());
  const Rat c = Pow(Frac(n, n + 1), n);
  Rat width = Pow(Rat(10), -40);
  std::vector<RealEnclosure> enc;
  for (const Real& a : alpha) enc.push_back(a.Enclose(width));
  for (Int q = 1; q <= q_max; ++q) {
    std::vector<Int> p(alpha.size());
    bool ok = true;
    for (std::size_t j = 0; j < alpha.size() && ok; ++j) {
      for (int round = 0;; ++round) {
        p[j] = Nearest(Rat(q) * enc[j].midpoint());
        const RealEnclosure d = Abs(RealEnclosure(Rat(q)) * enc[j] - RealEnclosure(Rat(p[j])));
        // |q alpha - p|^n q < c, decided on the enclosure ends.
        if (Pow(d.hi(), n) * q < c) break;
        if (Pow(d.lo(), n) * q >= c || round == 4) {
          ok = false;
          break;
        }
        width /= Pow(Rat(2), 64);
        enc[j] = alpha[j].Refine(enc[j], width);
      }
    }
    if (ok) return {std::move(p), q};
  }
  throw Error(ErrorKind::kBudget, "no admissible q up to q_max");
}

}  // namespace gon
