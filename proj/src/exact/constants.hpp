#pragma once

// Enclosures of the transcendental constants behind Real's leaf nodes.

#include "gon/exact.hpp"

namespace gon::detail {

// Nested in `bits`: a larger request never returns a wider interval.
RealEnclosure PiEnclosure(long bits);
// ln(x) for x > 0, width about 2^-bits times a small constant.
RealEnclosure LogEnclosure(const Rat& x, long bits);
// zeta(n), n >= 2; width plateaus once the partial-sum cap is reached.
RealEnclosure ZetaEnclosure(unsigned n, long bits);
// Fixed 50-digit enclosure of Euler's constant.
RealEnclosure EulerGammaEnclosure();

}  // namespace gon::detail
