#include <algorithm>
#include <cmath>
#include <numbers>

#include "gon/counting.hpp"

namespace gon {

namespace {

constexpr std::size_t kOrchardMaxTrees = 200'000;

int Sgn(const Rat& x) { return sgn(x); }

// Sign of u + a sqrt(x) for x >= 0.
int SignSqrt(const Rat& u, const Rat& a, const Rat& x) {
  const int su = Sgn(u);
  const int sa = x == 0 ? 0 : Sgn(a);
  if (sa == 0) return su;
  if (su == 0 || su == sa) return sa;
  return su * Sgn(Rat(u * u - a * a * x));
}

// Sign of u + a sqrt(x) + b sqrt(y) for x, y >= 0.
int SignSqrt2(const Rat& u, const Rat& a, const Rat& x, const Rat& b, const Rat& y) {
  const int sp = SignSqrt(u, a, x);
  const int sq = y == 0 ? 0 : Sgn(b);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare (u + a sqrt x)^2 with b^2 y.
  const int diff = SignSqrt(Rat(u * u + a * a * x - b * b * y), Rat(2 * u * a), x);
  return sp * diff;
}

struct Tree {
  std::int64_t x;
  std::int64_t y;
  Rat slack;      // |p|^2 - r^2, so cos(alpha) |p| = sqrt(slack)
  double theta;   // direction of p
  double alpha;   // half-width of the shadow arc
  double s;       // sqrt(slack)
};

class Orchard {
 public:
  Orchard(std::vector<Tree> trees, Rat r) : trees_(std::move(trees)), r_(std::move(r)) {
    rd_ = r_.get_d();
  }

  // True when the far end of A's shadow lies in [start_B, end_B), i.e. the
  // signed angle phi from p_B to p_A satisfies -a_A - a_B <= phi < a_B - a_A.
  // Both half-widths stay below pi / 6, so sines decide on |phi| < pi / 2.
  bool Covers(const Tree& a, const Tree& b) const {
    const std::int64_t dot = a.x * b.x + a.y * b.y;
    const std::int64_t cross = b.x * a.y - b.y * a.x;
    // |phi| >= pi / 2 lies outside the window (-pi / 3, pi / 6).
    if (dot <= 0) return false;
    // cross < r (s_A - s_B) and cross + r (s_A + s_B) >= 0.
    const double c = static_cast<double>(cross);
    const double first = rd_ * (a.s - b.s) - c;
    const double second = c + rd_ * (a.s + b.s);
    const double margin = 1e-9 * (std::abs(c) + rd_ * (a.s + b.s));
    if (first < -margin || second < -margin) return false;
    bool ok_first = first > margin;
    bool ok_second = second > margin;
    if (!ok_first) {
      ok_first = SignSqrt2(Rat(-cross), r_, a.slack, Rat(-r_), b.slack) > 0;
    }
    if (ok_first && !ok_second) {
      ok_second = SignSqrt2(Rat(cross), r_, a.slack, r_, b.slack) >= 0;
    }
    return ok_first && ok_second;
  }

  const std::vector<Tree>& trees() const { return trees_; }

 private:
  std::vector<Tree> trees_;
  Rat r_;
  double rd_;
};

double Wrap(double angle) {
  constexpr double kTau = 2 * std::numbers::pi;
  angle = std::fmod(angle, kTau);
  if (angle < 0) angle += kTau;
  return angle;
}

// The ray along d avoids the closed disc of radius r at p exactly when
// d . p <= 0 (nearest ray point is the origin, at distance |p| >= 1 > r) or
// the line distance |d x p| / |d| exceeds r.
bool RayMisses(const Int& dx, const Int& dy, const Tree& t, const Rat& r2) {
  const Int dot = dx * t.x + dy * t.y;
  if (dot <= 0) return true;
  const Int cross = dx * t.y - dy * t.x;
  return Rat(cross * cross) > r2 * Rat(dx * dx + dy * dy);
}

std::optional<RatVec> CertifyEscape(const std::vector<Tree>& trees, const Rat& r,
                                    double angle) {
  const Rat r2 = r * r;
  for (int k : {30, 50, 60}) {
    const double scale = std::ldexp(1.0, k);
    const Int dx(std::to_string(std::llround(std::cos(angle) * scale)), 10);
    const Int dy(std::to_string(std::llround(std::sin(angle) * scale)), 10);
    const bool clear = std::all_of(trees.begin(), trees.end(), [&](const Tree& t) {
      return RayMisses(dx, dy, t, r2);
    });
    if (clear) return RatVec{Rat(dx), Rat(dy)};
  }
  return std::nullopt;
}

}  // namespace

OrchardResult OrchardVisibility(const Rat& big_r, const Rat& r) {
  if (big_r < 2) throw Error(ErrorKind::kDomain, "R must be at least 2");
  if (r <= 0 || r > Rat(1, 2)) throw Error(ErrorKind::kDomain, "r must lie in (0, 1/2]");
  const Rat big_r2 = big_r * big_r;
  if (big_r > 1000 || BallCount(2, ToInt64(Floor(big_r2))) - 1 > kOrchardMaxTrees) {
    throw Error(ErrorKind::kBudget, "too many trees");
  }
  const std::int64_t n2 = ToInt64(Floor(big_r2));
  const std::int64_t bound = ToInt64(Floor(big_r));
  const double rd = r.get_d();
  std::vector<Tree> trees;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const std::int64_t norm = x * x + y * y;
      if (norm == 0 || norm > n2) continue;
      const Rat slack = Rat(norm) - r * r;
      const double len = std::sqrt(static_cast<double>(norm));
      trees.push_back({x, y, slack, std::atan2(static_cast<double>(y), static_cast<double>(x)),
                       std::asin(rd / len), std::sqrt(slack.get_d())});
    }
  }
  std::sort(trees.begin(), trees.end(),
            [](const Tree& a, const Tree& b) { return a.theta < b.theta; });
  const Orchard orchard(trees, r);
  const std::size_t n = trees.size();

  // Best candidate for each arc end: the arc reaching furthest among those
  // starting no later. Starts are listed twice (shifted by 2 pi) so a single
  // sorted pass handles the wrap.
  constexpr double kTau = 2 * std::numbers::pi;
  struct Start {
    double start;
    double end;
    std::size_t index;
  };
  std::vector<Start> starts;
  starts.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = trees[i].theta - trees[i].alpha;
    starts.push_back({s, s + 2 * trees[i].alpha, i});
    starts.push_back({s + kTau, s + kTau + 2 * trees[i].alpha, i});
  }
  std::sort(starts.begin(), starts.end(),
            [](const Start& a, const Start& b) { return a.start < b.start; });
  std::vector<std::size_t> best(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    best[i] = i == 0 || starts[i].end > starts[best[i - 1]].end ? i : best[i - 1];
  }

  for (std::size_t ia = 0; ia < n; ++ia) {
    const Tree& a = trees[ia];
    // End of A's shadow, placed in [pi, 3 pi) so every covering arc has a
    // listed copy starting no later.
    const double end = Wrap(a.theta + a.alpha + std::numbers::pi) + std::numbers::pi;
    const auto upto = std::upper_bound(
        starts.begin(), starts.end(), end + 1e-9,
        [](double v, const Start& s) { return v < s.start; });
    bool covered = false;
    if (upto != starts.begin()) {
      const Start& cand = starts[best[static_cast<std::size_t>(upto - starts.begin()) - 1]];
      covered = cand.index != ia && orchard.Covers(a, trees[cand.index]);
    }
    // Exhaustive fallback over the angular window of possible covers.
    for (std::size_t ib = 0; ib < n && !covered; ++ib) {
      if (ib == ia) continue;
      double gap = Wrap(trees[ib].theta - a.theta + std::numbers::pi) - std::numbers::pi;
      if (gap < -std::numbers::pi / 6 - 1e-6 || gap > std::numbers::pi / 3 + 1e-6) continue;
      covered = orchard.Covers(a, trees[ib]);
    }
    if (covered) continue;

    // Nothing covers the end of A's shadow: aim into the gap that follows.
    double next = kTau;
    for (const Tree& t : trees) {
      const double gap = Wrap(t.theta - t.alpha - (a.theta + a.alpha));
      if (gap > 0 && gap < next) next = gap;
    }
    const double mid = a.theta + a.alpha + next / 2;
    const auto escape = CertifyEscape(trees, r, mid);
    if (!escape) {
      throw Error(ErrorKind::kPrecision, "could not certify an escaping direction");
    }
    OrchardResult out{false, escape, n, {}};
    out.certificate = "direction (" + ToString((*escape)[0]) + ", " + ToString((*escape)[1]) +
                      ") misses all " + std::to_string(n) + " trees";
    return out;
  }
  return {true, std::nullopt, n,
          "each of the " + std::to_string(n) +
              " shadow arcs ends inside another, so the shadows cover every direction"};
}

}  // namespace gon
