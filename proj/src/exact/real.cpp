#include <algorithm>
#include <utility>

#include "constants.hpp"
#include "gon/exact.hpp"

namespace gon {

enum class NodeKind {
  kConst,
  kPi,
  kEulerGamma,
  kZeta,
  kSqrt,
  kLog,
  kPow,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
};

struct Real::Node {
  NodeKind kind = NodeKind::kConst;
  Rat value;           // constant value or exponent
  unsigned zeta_n = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Real::Node>;

constexpr long kMaxEncloseBits = 32768;
constexpr long kStepGuard = 8;

NodePtr MakeConst(const Rat& value) {
  auto node = std::make_shared<Real::Node>();
  node->kind = NodeKind::kConst;
  node->value = value;
  node->value.canonicalize();
  return node;
}

NodePtr MakeNode(NodeKind kind, NodePtr a, NodePtr b = nullptr) {
  auto node = std::make_shared<Real::Node>();
  node->kind = kind;
  node->a = std::move(a);
  node->b = std::move(b);
  return node;
}

const Rat* ConstOf(const NodePtr& node) {
  return node->kind == NodeKind::kConst ? &node->value : nullptr;
}

// Rational q-th root of r, if one exists.
std::optional<Rat> RationalRoot(const Rat& r, unsigned long q) {
  if (r < 0) return std::nullopt;
  Int num, den;
  if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), q) == 0) return std::nullopt;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

RealEnclosure EvalNode(const Real::Node& node, long bits) {
  const long child_bits = bits + kStepGuard;
  switch (node.kind) {
    case NodeKind::kConst:
      return RealEnclosure(node.value);
    case NodeKind::kPi:
      return detail::PiEnclosure(bits);
    case NodeKind::kEulerGamma:
      return detail::EulerGammaEnclosure();
    case NodeKind::kZeta:
      return detail::ZetaEnclosure(node.zeta_n, bits);
    case NodeKind::kSqrt:
      return RootEnclosure(EvalNode(*node.a, 2 * child_bits), 2, child_bits);
    case NodeKind::kLog: {
      RealEnclosure x = EvalNode(*node.a, child_bits);
      if (x.lo() <= 0) {
        if (x.hi() <= 0) {
          throw Error(ErrorKind::kDomain, "logarithm of non-positive value");
        }
        throw Error(ErrorKind::kPrecision, "logarithm argument straddles zero");
      }
      const RealEnclosure lo = detail::LogEnclosure(x.lo(), child_bits);
      const RealEnclosure hi = detail::LogEnclosure(x.hi(), child_bits);
      return RealEnclosure(lo.lo(), hi.hi()).RoundOut(child_bits);
    }
    case NodeKind::kPow: {
      const Int& p = node.value.get_num();
      const Int& q = node.value.get_den();
      const long p_long = ToInt64(p);
      RealEnclosure x = EvalNode(*node.a, child_bits * 2);
      if (q == 1) return IntPow(x, p_long).RoundOut(child_bits);
      if (x.lo() <= 0 && p_long < 0) {
        throw Error(ErrorKind::kPrecision, "negative power near zero");
      }
      if (x.lo() < 0) x = RealEnclosure(Rat(0), std::max(Rat(0), x.hi()));
      RealEnclosure powered = IntPow(x, p_long).RoundOut(child_bits * 2);
      return RootEnclosure(powered, q.get_ui(), child_bits);
    }
    case NodeKind::kAdd:
      return EvalNode(*node.a, child_bits) + EvalNode(*node.b, child_bits);
    case NodeKind::kSub:
      return EvalNode(*node.a, child_bits) - EvalNode(*node.b, child_bits);
    case NodeKind::kMul:
      return (EvalNode(*node.a, child_bits) * EvalNode(*node.b, child_bits))
          .RoundOut(child_bits);
    case NodeKind::kDiv:
      return (EvalNode(*node.a, child_bits) / EvalNode(*node.b, child_bits))
          .RoundOut(child_bits);
    case NodeKind::kNeg:
      return -EvalNode(*node.a, bits);
  }
  throw Error(ErrorKind::kDomain, "unknown expression node");
}

std::string NodeString(const Real::Node& node) {
  switch (node.kind) {
    case NodeKind::kConst:
      return node.value.get_den() == 1 ? node.value.get_num().get_str()
                                       : ToString(node.value);
    case NodeKind::kPi:
      return "pi";
    case NodeKind::kEulerGamma:
      return "euler_gamma";
    case NodeKind::kZeta:
      return "zeta(" + std::to_string(node.zeta_n) + ")";
    case NodeKind::kSqrt:
      return "sqrt(" + NodeString(*node.a) + ")";
    case NodeKind::kLog:
      return "log(" + NodeString(*node.a) + ")";
    case NodeKind::kPow:
      return "(" + NodeString(*node.a) + ")^(" + ToString(node.value) + ")";
    case NodeKind::kAdd:
      return "(" + NodeString(*node.a) + " + " + NodeString(*node.b) + ")";
    case NodeKind::kSub:
      return "(" + NodeString(*node.a) + " - " + NodeString(*node.b) + ")";
    case NodeKind::kMul:
      return "(" + NodeString(*node.a) + " * " + NodeString(*node.b) + ")";
    case NodeKind::kDiv:
      return "(" + NodeString(*node.a) + " / " + NodeString(*node.b) + ")";
    case NodeKind::kNeg:
      return "-" + NodeString(*node.a);
  }
  return "?";
}

}  // namespace

Real::Real() : node_(MakeConst(Rat(0))) {}
Real::Real(const Rat& value) : node_(MakeConst(value)) {}
Real::Real(long value) : node_(MakeConst(Rat(value))) {}
Real::Real(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Real Real::Pi() {
  static const NodePtr kPi = MakeNode(NodeKind::kPi, nullptr);
  return Real(kPi);
}

Real Real::EulerGamma() {
  static const NodePtr kGamma = MakeNode(NodeKind::kEulerGamma, nullptr);
  return Real(kGamma);
}

Real Real::Zeta(unsigned n) {
  if (n < 2) throw Error(ErrorKind::kDomain, "zeta needs an integer n >= 2");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kZeta;
  node->zeta_n = n;
  return Real(NodePtr(node));
}

Real Real::Sqrt(const Real& x) {
  if (const Rat* c = ConstOf(x.node_)) {
    if (*c < 0) {
      throw Error(ErrorKind::kDomain, "square root of negative " + gon::ToString(*c));
    }
    if (auto root = RationalRoot(*c, 2)) return Real(*root);
  }
  return Real(MakeNode(NodeKind::kSqrt, x.node_));
}

Real Real::Log(const Real& x) {
  if (const Rat* c = ConstOf(x.node_)) {
    if (*c <= 0) {
      throw Error(ErrorKind::kDomain, "logarithm of non-positive " + gon::ToString(*c));
    }
    if (*c == 1) return Real(0);
  }
  return Real(MakeNode(NodeKind::kLog, x.node_));
}

Real Real::Pow(const Real& x, const Rat& exponent) {
  Rat e = exponent;
  e.canonicalize();
  if (e == 0) return Real(1);
  if (e == 1) return x;
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_ulong_p()) {
    throw Error(ErrorKind::kDomain, "exponent too large: " + gon::ToString(e));
  }
  if (const Rat* c = ConstOf(x.node_)) {
    const long p = e.get_num().get_si();
    if (e.get_den() == 1) return Real(gon::Pow(*c, p));
    if (*c < 0) {
      throw Error(ErrorKind::kDomain, "fractional power of negative value");
    }
    if (*c == 0) {
      if (p < 0) throw Error(ErrorKind::kDomain, "zero to a negative power");
      return Real(0);
    }
    if (auto root = RationalRoot(gon::Pow(*c, p), e.get_den().get_ui())) {
      return Real(*root);
    }
  }
  if (e == Rat(1, 2)) return Sqrt(x);
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kPow;
  node->value = e;
  node->a = x.node_;
  return Real(NodePtr(node));
}

Real operator+(const Real& a, const Real& b) {
  const Rat* ca = ConstOf(a.node_);
  const Rat* cb = ConstOf(b.node_);
  if (ca && cb) return Real(Rat(*ca + *cb));
  if (ca && *ca == 0) return b;
  if (cb && *cb == 0) return a;
  return Real(MakeNode(NodeKind::kAdd, a.node_, b.node_));
}

Real operator-(const Real& a, const Real& b) {
  const Rat* ca = ConstOf(a.node_);
  const Rat* cb = ConstOf(b.node_);
  if (ca && cb) return Real(Rat(*ca - *cb));
  if (cb && *cb == 0) return a;
  if (a.node_ == b.node_) return Real(0);
  return Real(MakeNode(NodeKind::kSub, a.node_, b.node_));
}

Real operator*(const Real& a, const Real& b) {
  const Rat* ca = ConstOf(a.node_);
  const Rat* cb = ConstOf(b.node_);
  if (ca && cb) return Real(Rat(*ca * *cb));
  if ((ca && *ca == 0) || (cb && *cb == 0)) return Real(0);
  if (ca && *ca == 1) return b;
  if (cb && *cb == 1) return a;
  return Real(MakeNode(NodeKind::kMul, a.node_, b.node_));
}

Real operator/(const Real& a, const Real& b) {
  const Rat* ca = ConstOf(a.node_);
  const Rat* cb = ConstOf(b.node_);
  if (cb && *cb == 0) throw Error(ErrorKind::kDomain, "division by zero");
  if (ca && cb) return Real(Rat(*ca / *cb));
  if (ca && *ca == 0) return Real(0);
  if (cb && *cb == 1) return a;
  return Real(MakeNode(NodeKind::kDiv, a.node_, b.node_));
}

Real operator-(const Real& a) {
  if (const Rat* c = ConstOf(a.node_)) return Real(Rat(-*c));
  return Real(MakeNode(NodeKind::kNeg, a.node_));
}

std::optional<Rat> Real::exact() const {
  if (const Rat* c = ConstOf(node_)) return *c;
  return std::nullopt;
}

RealEnclosure Real::Eval(long bits) const {
  return EvalNode(*node_, std::max(bits, 8L));
}

RealEnclosure Real::Enclose(const Rat& max_width) const {
  if (max_width <= 0) {
    throw Error(ErrorKind::kDomain, "enclosure width must be positive");
  }
  if (auto c = exact()) return RealEnclosure(*c).WithBudget(max_width);
  for (long bits = 64; bits <= kMaxEncloseBits; bits *= 2) {
    try {
      RealEnclosure e = Eval(bits);
      if (e.width() <= max_width) return e.WithBudget(max_width);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kPrecision) throw;
    }
  }
  throw Error(ErrorKind::kPrecisionExhausted,
              "cannot enclose " + ToString() + " within width " +
                  gon::ToString(max_width));
}

RealEnclosure Real::Refine(const RealEnclosure& previous,
                           const Rat& max_width) const {
  return Enclose(max_width).Intersect(previous).WithBudget(max_width);
}

std::string Real::ToString() const { return NodeString(*node_); }

Real GammaHalf(long twice_argument) {
  if (twice_argument < 1) {
    throw Error(ErrorKind::kDomain, "gamma needs a positive half-integer");
  }
  // Γ(z+1) = zΓ(z) down to Γ(1) = 1 or Γ(1/2) = √π.
  Rat factor = 1;
  long k = twice_argument;
  while (k > 2) {
    k -= 2;
    factor *= Frac(k, 2);
  }
  if (k == 2) return Real(factor);
  return Real(factor) * Real::Sqrt(Real::Pi());
}

Real UnitBallVolume(int n) {
  if (n < 1) throw Error(ErrorKind::kDomain, "ball dimension must be >= 1");
  // For odd n, Γ(n/2+1) = c√π cancels against π^(n/2) = π^((n-1)/2)√π.
  Rat c = 1;
  long k = n + 2;
  while (k > 2) {
    k -= 2;
    c *= Frac(k, 2);
  }
  return Real::Pow(Real::Pi(), Rat(n / 2)) / Real(c);
}

std::string_view ToString(Ordering ordering) {
  switch (ordering) {
    case Ordering::kLess:
      return "less";
    case Ordering::kGreater:
      return "greater";
    case Ordering::kUndecided:
      return "undecided";
  }
  return "undecided";
}

Ordering CertifiedCompare(const Real& a, const Real& b,
                          const CompareBudget& budget) {
  const auto ea = a.exact();
  const auto eb = b.exact();
  if (ea && eb) {
    if (*ea < *eb) return Ordering::kLess;
    if (*ea > *eb) return Ordering::kGreater;
    return Ordering::kUndecided;
  }
  long bits = budget.start_bits;
  long last_bits = -1;
  for (int round = 0; round < budget.max_rounds; ++round) {
    const long use = std::min(bits, budget.max_bits);
    if (use == last_bits) break;
    last_bits = use;
    try {
      const RealEnclosure x = a.Eval(use);
      const RealEnclosure y = b.Eval(use);
      if (x.hi() < y.lo()) return Ordering::kLess;
      if (y.hi() < x.lo()) return Ordering::kGreater;
      if (x.width() <= budget.max_width && y.width() <= budget.max_width) {
        return Ordering::kUndecided;
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kPrecision &&
          err.kind() != ErrorKind::kPrecisionExhausted) {
        throw;
      }
    }
    bits *= 2;
  }
  return Ordering::kUndecided;
}

std::optional<bool> CertifiedLessEqual(const Real& a, const Real& b,
                                       const CompareBudget& budget) {
  const auto ea = a.exact();
  const auto eb = b.exact();
  if (ea && eb) return *ea <= *eb;
  switch (CertifiedCompare(a, b, budget)) {
    case Ordering::kLess:
      return true;
    case Ordering::kGreater:
      return false;
    case Ordering::kUndecided:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<bool> CertifiedLess(const Real& a, const Real& b,
                                  const CompareBudget& budget) {
  const auto ea = a.exact();
  const auto eb = b.exact();
  if (ea && eb) return *ea < *eb;
  switch (CertifiedCompare(a, b, budget)) {
    case Ordering::kLess:
      return true;
    case Ordering::kGreater:
      return false;
    case Ordering::kUndecided:
      return std::nullopt;
  }
  return std::nullopt;
}

RealEnclosure EnclosePi(const Rat& max_width) {
  return Real::Pi().Enclose(max_width);
}

RealEnclosure EncloseSqrt(const Rat& r, const Rat& max_width) {
  if (r < 0) {
    throw Error(ErrorKind::kDomain, "square root of negative " + ToString(r));
  }
  return Real::Sqrt(Real(r)).Enclose(max_width);
}

RealEnclosure EncloseZeta(unsigned n, const Rat& max_width) {
  return Real::Zeta(n).Enclose(max_width);
}

}  // namespace gon
