#pragma once

// Exact arithmetic kernel: GMP-backed integers and rationals, rational-endpoint
// enclosures of real numbers, and lazily refinable real expressions that can be
// compared rigorously.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gon/error.hpp"

namespace gon {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical "num/den" text, den > 0.
std::string ToString(const Rat& value);
std::string ToString(const Int& value);

// Accepts "a", "a/b", decimals ("-1.25") and scientific notation ("1e6").
// Throws Error(kParse) on malformed input or a zero denominator.
Rat ParseRat(std::string_view text);
Int ParseInt(std::string_view text);

// num/den in canonical form; den != 0.
Rat Frac(const Int& num, const Int& den);

Int Floor(const Rat& value);
Int Ceil(const Rat& value);
Int ISqrt(const Int& value);  // floor(sqrt(value)), value >= 0
bool IsPerfectSquare(const Int& value);
Rat Pow(const Rat& base, long exponent);
Int Pow(const Int& base, unsigned long exponent);
Rat Abs(const Rat& value);

// 64-bit conversions that throw Error(kDomain) when the value does not fit.
std::int64_t ToInt64(const Int& value);

// ---------------------------------------------------------------------------
// RealEnclosure: a closed interval [lo, hi] with rational endpoints.

class RealEnclosure {
 public:
  RealEnclosure() = default;
  RealEnclosure(const Rat& exact);  // NOLINT: implicit on purpose
  RealEnclosure(const Rat& lo, const Rat& hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  // The width the producer was asked for; equals width() unless a caller
  // requested a coarser target.
  const Rat& budget() const { return budget_; }
  RealEnclosure WithBudget(const Rat& budget) const;

  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }
  bool is_exact() const { return lo_ == hi_; }

  bool Contains(const Rat& value) const { return lo_ <= value && value <= hi_; }
  bool Contains(const RealEnclosure& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool Overlaps(const RealEnclosure& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }
  // Throws Error(kDomain) when the enclosures are disjoint.
  RealEnclosure Intersect(const RealEnclosure& other) const;
  // Outward rounding of both endpoints to multiples of 2^-bits.
  RealEnclosure RoundOut(long bits) const;

  friend RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
  // Throws Error(kPrecision) when the divisor straddles zero.
  friend RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a);
  friend bool operator==(const RealEnclosure& a, const RealEnclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  // "[lo, hi]" with canonical rationals.
  std::string ToString() const;
  // Decimal rendering with `digits` fractional digits, rounded outward.
  std::string ToDecimalString(int digits) const;

 private:
  Rat lo_ = 0;
  Rat hi_ = 0;
  Rat budget_ = 0;
};

// Decimal renderings with `digits` fractional digits, rounded down or up.
std::string DecimalFloor(const Rat& value, int digits);
std::string DecimalCeil(const Rat& value, int digits);

RealEnclosure Abs(const RealEnclosure& x);
RealEnclosure IntPow(const RealEnclosure& x, long exponent);

// q-th root of a non-negative rational, rounded outward to 2^-bits; exact when
// the root is rational.
RealEnclosure RootEnclosure(const Rat& value, unsigned long q, long bits);
// Monotone extension to an interval with lo >= 0 (tiny negative lower ends
// are clamped to zero; a negative upper end is a domain error).
RealEnclosure RootEnclosure(const RealEnclosure& value, unsigned long q,
                            long bits);

// ---------------------------------------------------------------------------
// Real: an immutable expression over rationals, pi, square roots, rational
// powers, zeta at integers >= 2, logarithms and Euler's constant. Evaluation
// at increasing precision yields nested-in-the-limit enclosures.

class Real {
 public:
  struct Node;

  Real();
  Real(const Rat& value);  // NOLINT: implicit on purpose
  Real(long value);        // NOLINT
  Real(int value) : Real(static_cast<long>(value)) {}  // NOLINT

  static Real Pi();
  static Real EulerGamma();
  static Real Zeta(unsigned n);
  static Real Sqrt(const Real& x);
  static Real Log(const Real& x);
  // x^(p/q) for x >= 0 (any sign when the exponent is an integer).
  static Real Pow(const Real& x, const Rat& exponent);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  // Set when the expression simplified to a rational at construction time.
  std::optional<Rat> exact() const;

  // Enclosure at a working precision of roughly `bits` bits.
  RealEnclosure Eval(long bits) const;
  // Refines until width <= max_width; throws Error(kPrecisionExhausted) once
  // the internal precision cap is reached first.
  RealEnclosure Enclose(const Rat& max_width) const;
  // Enclose(max_width) intersected with `previous`: refinement never widens.
  RealEnclosure Refine(const RealEnclosure& previous, const Rat& max_width) const;

  std::string ToString() const;

 private:
  explicit Real(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Γ(k/2) for an integer k >= 1, as rational × sqrt(pi) or a rational.
Real GammaHalf(long twice_argument);
// Volume of the n-dimensional unit ball, pi^(n/2) / Γ(n/2 + 1).
Real UnitBallVolume(int n);

enum class Ordering { kLess, kGreater, kUndecided };
std::string_view ToString(Ordering ordering);

struct CompareBudget {
  Rat max_width = Rat(1, 1) / Pow(Int(10), 60);
  int max_rounds = 20;
  long start_bits = 32;
  long max_bits = 8192;
};

// Rigorous ordering of two real expressions; kUndecided only when the budget
// is exhausted (in particular on true equality of irrational values). Exact
// rational operands are compared exactly, equality reported as kUndecided.
Ordering CertifiedCompare(const Real& a, const Real& b,
                          const CompareBudget& budget = {});

// a <= b / a < b. Exact operands are decided exactly (including equality);
// otherwise via CertifiedCompare. nullopt when undecided.
std::optional<bool> CertifiedLessEqual(const Real& a, const Real& b,
                                       const CompareBudget& budget = {});
std::optional<bool> CertifiedLess(const Real& a, const Real& b,
                                  const CompareBudget& budget = {});

RealEnclosure EnclosePi(const Rat& max_width);
RealEnclosure EncloseSqrt(const Rat& r, const Rat& max_width);
RealEnclosure EncloseZeta(unsigned n, const Rat& max_width);

}  // namespace gon
