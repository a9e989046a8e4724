#include "constants.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <optional>

namespace gon::detail {
namespace {

constexpr long kGuardBits = 24;

Int TwoPow(long bits) { return Pow(Int(2), static_cast<unsigned long>(bits)); }

Int FloorDiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int CeilDiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// S * atan(1/x) in fixed point with S = 2^bits, bounds [lo, hi].
// p_j = floor(S / x^(2j+1)) exactly, since nested floors of positive integer
// quotients compose. The series alternates with decreasing terms, so the
// truncation error is bounded by the first omitted term.
std::pair<Int, Int> ArctanInverse(unsigned long x, long bits) {
  const Int scale = TwoPow(bits);
  const Int x2 = Int(x) * Int(x);
  Int p = FloorDiv(scale, Int(x));
  Int lo = 0;
  Int hi = 0;
  for (unsigned long j = 0;; ++j) {
    const Int denom = Int(2 * j + 1);
    // term in [p/denom, (p+1)/denom]
    const Int t_lo = FloorDiv(p, denom);
    const Int t_hi = CeilDiv(Int(p + 1), denom);
    if (p == 0) {
      // All remaining terms are below 1/denom < 1.
      lo -= 1;
      hi += 1;
      break;
    }
    if (j % 2 == 0) {
      lo += t_lo;
      hi += t_hi;
    } else {
      lo -= t_hi;
      hi -= t_lo;
    }
    p = FloorDiv(p, x2);
  }
  return {lo, hi};
}

RealEnclosure MachinPi(long bits) {
  const long work = bits + kGuardBits;
  auto [a_lo, a_hi] = ArctanInverse(5, work);
  auto [b_lo, b_hi] = ArctanInverse(239, work);
  const Int lo = 16 * a_lo - 4 * b_hi;
  const Int hi = 16 * a_hi - 4 * b_lo;
  const Int scale = TwoPow(work);
  Rat rlo(lo, scale);
  Rat rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return RealEnclosure(rlo, rhi);
}

// Precision levels 64 * 2^k bits; each level is intersected with the
// previous one so the returned enclosures are nested.
constexpr int kPiLevels = 14;

struct PiCache {
  std::mutex mutex;
  std::array<std::optional<RealEnclosure>, kPiLevels> levels;
};

PiCache& GetPiCache() {
  static PiCache cache;
  return cache;
}

// S * atanh(y) for 0 <= y <= 1/3 as fixed-point bounds, S = 2^bits.
std::pair<Int, Int> AtanhFixed(const Rat& y, long bits) {
  if (y == 0) return {Int(0), Int(0)};
  const Int scale = TwoPow(bits);
  const Rat y2 = y * y;
  // p_lo <= S y^(2j+1) <= p_hi, tracked with directed rounding.
  Int p_lo = Floor(y * scale);
  Int p_hi = Ceil(y * scale);
  const Int y2_num = y2.get_num();
  const Int y2_den = y2.get_den();
  Int lo = 0;
  Int hi = 0;
  for (unsigned long j = 0;; ++j) {
    const Int denom = Int(2 * j + 1);
    if (p_hi <= 1) {
      // Remaining tail <= p_hi/denom * 1/(1-y^2) <= (9/8) p_hi / denom.
      hi += CeilDiv(Int(9 * p_hi), Int(8 * denom));
      break;
    }
    lo += FloorDiv(p_lo, denom);
    hi += CeilDiv(p_hi, denom);
    p_lo = FloorDiv(Int(p_lo * y2_num), y2_den);
    p_hi = CeilDiv(Int(p_hi * y2_num), y2_den);
  }
  return {lo, hi};
}

RealEnclosure Ln2(long bits) {
  const long work = bits + kGuardBits;
  auto [lo, hi] = AtanhFixed(Rat(1, 3), work);
  const Int scale = TwoPow(work);
  Rat rlo(2 * lo, scale);
  Rat rhi(2 * hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return RealEnclosure(rlo, rhi);
}

long BitLength(const Int& v) {
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

}  // namespace

RealEnclosure PiEnclosure(long bits) {
  int level = 0;
  while (level + 1 < kPiLevels && (64L << level) < bits) ++level;
  PiCache& cache = GetPiCache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (cache.levels[level]) return *cache.levels[level];
  // Fill every missing level up to the requested one so nesting holds.
  std::optional<RealEnclosure> previous;
  for (int k = 0; k <= level; ++k) {
    if (!cache.levels[k]) {
      RealEnclosure fresh = MachinPi(64L << k);
      if (previous) fresh = fresh.Intersect(*previous);
      cache.levels[k] = fresh;
    }
    previous = cache.levels[k];
  }
  return *cache.levels[level];
}

RealEnclosure LogEnclosure(const Rat& x, long bits) {
  if (x <= 0) {
    throw Error(ErrorKind::kDomain, "logarithm of non-positive " + ToString(x));
  }
  if (x == 1) return RealEnclosure(Rat(0));
  // x = 2^k m with 1 <= m < 2.
  long k = BitLength(x.get_num()) - BitLength(x.get_den());
  Rat m = x;
  if (k > 0) {
    m /= Rat(TwoPow(k));
  } else if (k < 0) {
    m *= Rat(TwoPow(-k));
  }
  if (m < 1) {
    m *= 2;
    --k;
  }
  if (m >= 2) {
    m /= 2;
    ++k;
  }
  const long kbits = k == 0 ? 0 : BitLength(Int(k < 0 ? -k : k));
  const long work = bits + kGuardBits + kbits;
  auto [lo, hi] = AtanhFixed((m - 1) / (m + 1), work);
  const Int scale = TwoPow(work);
  Rat mlo(2 * lo, scale);
  Rat mhi(2 * hi, scale);
  mlo.canonicalize();
  mhi.canonicalize();
  RealEnclosure result(mlo, mhi);
  if (k != 0) result = result + RealEnclosure(Rat(k)) * Ln2(work);
  return result;
}

RealEnclosure ZetaEnclosure(unsigned n, long bits) {
  if (n < 2) throw Error(ErrorKind::kDomain, "zeta needs an integer n >= 2");
  const long work = bits + kGuardBits;
  const Int scale = TwoPow(work);
  // Integral tails leave an error of order N^-(n+1); past 2^16 terms the
  // enclosure stops shrinking.
  const long log_terms = std::clamp((bits + 2) / static_cast<long>(n + 1) + 1,
                                    6L, 16L);
  const unsigned long terms = 1UL << log_terms;
  Int lo = 0;
  Int hi = 0;
  for (unsigned long k = 1; k <= terms; ++k) {
    const Int power = Pow(Int(k), n);
    lo += FloorDiv(scale, power);
    hi += CeilDiv(scale, power);
  }
  // Convex decreasing t^-n: trapezoid and midpoint rules bracket the tail.
  const Rat m(Int(terms + 1));
  const Rat tail_lo =
      1 / (Rat(n - 1) * Pow(m, static_cast<long>(n) - 1)) +
      1 / (2 * Pow(m, static_cast<long>(n)));
  const Rat half_shift = m - Rat(1, 2);
  const Rat tail_hi =
      1 / (Rat(n - 1) * Pow(half_shift, static_cast<long>(n) - 1));
  Rat rlo(lo, scale);
  Rat rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return RealEnclosure(rlo + tail_lo, rhi + tail_hi).RoundOut(work);
}

RealEnclosure EulerGammaEnclosure() {
  static const RealEnclosure kGamma = [] {
    const Rat lo = ParseRat("0.5772156649015328606065120900824024310421593359399");
    const Rat hi = lo + Rat(1) / Rat(Pow(Int(10), 49));
    return RealEnclosure(lo, hi);
  }();
  return kGamma;
}

}  // namespace gon::detail
