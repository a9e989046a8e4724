#include <algorithm>
#include <sstream>
#include <string>

#include "gon/exact.hpp"

namespace gon {

RealEnclosure::RealEnclosure(const Rat& exact)
    : lo_(exact), hi_(exact), budget_(0) {}

RealEnclosure::RealEnclosure(const Rat& lo, const Rat& hi)
    : lo_(lo), hi_(hi), budget_(hi - lo) {
  if (hi_ < lo_) {
    throw Error(ErrorKind::kDomain,
                "enclosure with lo > hi: " + gon::ToString(lo) + " > " +
                    gon::ToString(hi));
  }
}

RealEnclosure RealEnclosure::WithBudget(const Rat& budget) const {
  RealEnclosure out = *this;
  out.budget_ = budget;
  return out;
}

RealEnclosure RealEnclosure::Intersect(const RealEnclosure& other) const {
  if (!Overlaps(other)) {
    throw Error(ErrorKind::kDomain, "disjoint enclosures " + ToString() +
                                        " and " + other.ToString());
  }
  RealEnclosure out(std::max(lo_, other.lo_), std::min(hi_, other.hi_));
  out.budget_ = std::min(budget_, other.budget_);
  return out;
}

RealEnclosure RealEnclosure::RoundOut(long bits) const {
  if (is_exact() && lo_.get_den() == 1) return *this;
  Int scale = Pow(Int(2), static_cast<unsigned long>(bits));
  Rat lo(Floor(lo_ * scale), scale);
  Rat hi(Ceil(hi_ * scale), scale);
  lo.canonicalize();
  hi.canonicalize();
  RealEnclosure out(lo, hi);
  out.budget_ = std::max(budget_, out.width());
  return out;
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  return RealEnclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  return RealEnclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RealEnclosure operator-(const RealEnclosure& a) {
  return RealEnclosure(-a.hi_, -a.lo_);
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  if (a.is_exact() && b.is_exact()) return RealEnclosure(Rat(a.lo_ * b.lo_));
  const Rat p1 = a.lo_ * b.lo_;
  const Rat p2 = a.lo_ * b.hi_;
  const Rat p3 = a.hi_ * b.lo_;
  const Rat p4 = a.hi_ * b.hi_;
  return RealEnclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) {
    throw Error(ErrorKind::kPrecision,
                "divisor enclosure " + b.ToString() + " contains zero");
  }
  return a * RealEnclosure(1 / b.hi_, 1 / b.lo_);
}

RealEnclosure Abs(const RealEnclosure& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return RealEnclosure(Rat(0), std::max(Rat(-x.lo()), x.hi()));
}

RealEnclosure IntPow(const RealEnclosure& x, long exponent) {
  if (exponent < 0) return RealEnclosure(Rat(1)) / IntPow(x, -exponent);
  if (exponent == 0) return RealEnclosure(Rat(1));
  const Rat lo = Pow(x.lo(), exponent);
  const Rat hi = Pow(x.hi(), exponent);
  if (exponent % 2 == 1) return RealEnclosure(lo, hi);
  if (x.lo() >= 0) return RealEnclosure(lo, hi);
  if (x.hi() <= 0) return RealEnclosure(hi, lo);
  return RealEnclosure(Rat(0), std::max(lo, hi));
}

namespace {

// Exact q-th root of a non-negative integer, if there is one.
bool ExactIntRoot(const Int& value, unsigned long q, Int* root) {
  return mpz_root(root->get_mpz_t(), value.get_mpz_t(), q) != 0;
}

}  // namespace

RealEnclosure RootEnclosure(const Rat& value, unsigned long q, long bits) {
  if (value < 0) {
    throw Error(ErrorKind::kDomain, "root of negative value " + ToString(value));
  }
  if (q == 0) throw Error(ErrorKind::kDomain, "zeroth root");
  if (q == 1) return RealEnclosure(value);
  Int num_root, den_root;
  if (ExactIntRoot(value.get_num(), q, &num_root) &&
      ExactIntRoot(value.get_den(), q, &den_root)) {
    Rat r(num_root, den_root);
    r.canonicalize();
    return RealEnclosure(r);
  }
  const Int scale = Pow(Int(2), static_cast<unsigned long>(bits));
  const Int scaled = Floor(value * Rat(Pow(scale, q)));
  Int r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), q);
  Rat lo(r, scale);
  Rat hi(Int(r + 1), scale);
  lo.canonicalize();
  hi.canonicalize();
  return RealEnclosure(lo, hi);
}

RealEnclosure RootEnclosure(const RealEnclosure& value, unsigned long q,
                            long bits) {
  if (value.is_exact()) return RootEnclosure(value.lo(), q, bits);
  if (value.hi() < 0) {
    throw Error(ErrorKind::kDomain,
                "root of negative enclosure " + value.ToString());
  }
  const Rat lo_arg = value.lo() < 0 ? Rat(0) : value.lo();
  RealEnclosure lo = RootEnclosure(lo_arg, q, bits);
  RealEnclosure hi = RootEnclosure(value.hi(), q, bits);
  return RealEnclosure(lo.lo(), hi.hi());
}

std::string RealEnclosure::ToString() const {
  return "[" + gon::ToString(lo_) + ", " + gon::ToString(hi_) + "]";
}

namespace {

std::string FixedPoint(const Int& scaled, int digits) {
  Int mag = scaled < 0 ? Int(-scaled) : scaled;
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return (scaled < 0 ? "-" : "") + s;
}

}  // namespace

std::string DecimalFloor(const Rat& value, int digits) {
  return FixedPoint(Floor(value * Pow(Int(10), static_cast<unsigned long>(digits))), digits);
}

std::string DecimalCeil(const Rat& value, int digits) {
  return FixedPoint(Ceil(value * Pow(Int(10), static_cast<unsigned long>(digits))), digits);
}

std::string RealEnclosure::ToDecimalString(int digits) const {
  const Int scale = Pow(Int(10), static_cast<unsigned long>(digits));
  const Int lo = Floor(lo_ * scale);
  const Int hi = Ceil(hi_ * scale);
  if (lo == hi) return FixedPoint(lo, digits);
  return "[" + FixedPoint(lo, digits) + ", " + FixedPoint(hi, digits) + "]";
}

}  // namespace gon
