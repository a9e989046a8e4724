#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "gon/exact.hpp"

namespace gon::detail {

// floor(sqrt(v)) for v >= 0.
inline std::int64_t ISqrt64(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline Int FromI128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  const Int base = Int(1) << 64;
  Int out = Int(std::to_string(static_cast<std::uint64_t>(u >> 64)), 10) * base +
            Int(std::to_string(static_cast<std::uint64_t>(u)), 10);
  return neg ? Int(-out) : out;
}

inline Int FromI64(std::int64_t v) { return FromI128(v); }

}  // namespace gon::detail
