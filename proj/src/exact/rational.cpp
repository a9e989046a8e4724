#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "gon/exact.hpp"

namespace gon {

std::string ToString(const Rat& value) {
  Rat canonical = value;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

std::string ToString(const Int& value) { return value.get_str(); }

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void ParseFailure(std::string_view text) {
  throw Error(ErrorKind::kParse, "not a rational: '" + std::string(text) + "'");
}

// Signed integer with optional leading sign.
Int ParseSignedDigits(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) ParseFailure(whole);
  Int value(std::string(s), 10);
  return negative ? Int(-value) : value;
}

}  // namespace

Rat ParseRat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) ParseFailure(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = ParseSignedDigits(s.substr(0, slash), text);
    Int den = ParseSignedDigits(s.substr(slash + 1), text);
    if (den == 0) ParseFailure(text);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  // Decimal with optional exponent.
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Int exp_value = ParseSignedDigits(s.substr(e + 1), text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) {
      ParseFailure(text);
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) ParseFailure(text);
    if ((!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      ParseFailure(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(s)) ParseFailure(text);
    digits = std::string(s);
  }
  Rat r{Int(digits, 10)};
  if (exponent > 0) {
    r *= Rat(Pow(Int(10), static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    r /= Rat(Pow(Int(10), static_cast<unsigned long>(-exponent)));
  }
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

Int ParseInt(std::string_view text) {
  Rat r = ParseRat(text);
  if (r.get_den() != 1) {
    throw Error(ErrorKind::kParse,
                "not an integer: '" + std::string(text) + "'");
  }
  return r.get_num();
}

Rat Frac(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::kDomain, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int Floor(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Int Ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Int ISqrt(const Int& value) {
  if (value < 0) throw Error(ErrorKind::kDomain, "isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

bool IsPerfectSquare(const Int& value) {
  return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

Int Pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rat Pow(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::kDomain, "zero to a negative power");
    Rat inv = 1 / base;
    return Pow(inv, -exponent);
  }
  Rat r(Pow(base.get_num(), static_cast<unsigned long>(exponent)),
        Pow(base.get_den(), static_cast<unsigned long>(exponent)));
  r.canonicalize();
  return r;
}

Rat Abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

std::int64_t ToInt64(const Int& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorKind::kDomain, "integer exceeds 64 bits: " + value.get_str());
  }
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace gon
