#include "gon/theorems.hpp"
#include "util/int_math.hpp"

namespace gon {

bool IsPrime(const Int& n) {
  if (n < 2) return false;
  const int probable = mpz_probab_prime_p(n.get_mpz_t(), 30);
  if (probable == 0) return false;
  if (probable == 2) return true;
  // Trial division settles the probable primes up to 10^14.
  if (n > Pow(Int(10), 14)) return true;
  const std::uint64_t v = n.get_ui();
  for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d == 0) return false;
  }
  return true;
}

namespace {

Int WilsonRoot(const Int& p) {
  // ((p-1)/2)!^2 = -1 mod p for p = 1 mod 4.
  const std::uint64_t pp = p.get_ui();
  unsigned __int128 acc = 1;
  for (std::uint64_t k = 2; k <= (pp - 1) / 2; ++k) acc = acc * k % pp;
  return Int(std::to_string(static_cast<std::uint64_t>(acc)), 10);
}

Int NonResidueRoot(const Int& p) {
  Int a = 2;
  while (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != -1) ++a;
  Int q;
  const Int e = (p - 1) / 4;
  mpz_powm(q.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return q;
}

}  // namespace

TwoSquareResult TwoSquare(const Int& p) {
  if (!IsPrime(p)) throw Error(ErrorKind::kDomain, ToString(p) + " is not prime");
  if (p % 4 != 1) {
    throw Error(ErrorKind::kDomain,
                ToString(p) + " is not 1 mod 4, so it is not a sum of two squares");
  }
  TwoSquareResult result;
  result.wilson = p < kWilsonLimit;
  result.q = result.wilson ? WilsonRoot(p) : NonResidueRoot(p);
  if ((result.q * result.q + 1) % p != 0) {
    throw Error(ErrorKind::kDomain, "failed to find q with q^2 = -1 mod p");
  }
  // Columns (q, 1) and (p, 0): every point has x^2 + y^2 divisible by p.
  const Lattice lattice =
      Reduce2d(Lattice::FromBasis(RatMatrix{{Rat(result.q), Rat(p)}, {1, 0}})).lattice;
  const ConvexBody disc = ConvexBody::Ball(2, Rat(2 * p));
  MinkowskiResult m = MinkowskiPoint(lattice, disc, MinkowskiMode::kStrict);
  Int a = Abs(m.point.ambient[0]).get_num();
  Int b = Abs(m.point.ambient[1]).get_num();
  if (b < a) std::swap(a, b);
  result.certificate = std::move(m.certificate);
  result.certificate.statement = "two-square";
  result.certificate.hypotheses.insert(
      result.certificate.hypotheses.begin(),
      {"q^2 = -1 mod p with q = " + ToString(result.q), "holds"});
  const Int sum = a * a + b * b;
  result.certificate.verification.push_back(
      {"a^2 + b^2 = " + ToString(sum) + " = p", sum == p ? "holds" : "fails"});
  if (sum != p) throw Error(ErrorKind::kDomain, "lattice point is not a representation");
  result.a = std::move(a);
  result.b = std::move(b);
  return result;
}

using detail::ISqrt64;

FourSquareResult FourSquare(std::int64_t m) {
  if (m < 0) throw Error(ErrorKind::kDomain, "m must be nonnegative");
  if (m > kFourSquareCap) throw Error(ErrorKind::kBudget, "m exceeds the search cap");
  // Greedy descent; parts non-increasing, so each remainder is bounded by
  // the count of remaining parts times the last square.
  for (std::int64_t a = ISqrt64(m); a >= 0; --a) {
    const std::int64_t r1 = m - a * a;
    if (r1 > 3 * a * a) break;
    for (std::int64_t b = std::min(a, ISqrt64(r1)); b >= 0; --b) {
      const std::int64_t r2 = r1 - b * b;
      if (r2 > 2 * b * b) break;
      for (std::int64_t c = std::min(b, ISqrt64(r2)); c >= 0; --c) {
        const std::int64_t r3 = r2 - c * c;
        if (r3 > c * c) break;
        const std::int64_t d = ISqrt64(r3);
        if (d * d == r3) return {a, b, c, d};
      }
    }
  }
  throw Error(ErrorKind::kNotFound, "no four-square representation found");
}

}  // namespace gon
