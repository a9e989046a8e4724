#pragma once

// Triangular and polygonal numbers and their decompositions.

#include <cstdint>
#include <vector>

#include "gon/exact.hpp"

namespace gon {

// n(n+1)/2; Error(kDomain) for n < 0.
Int Triangular(const Int& n);
// ((k-2)n^2 - (k-4)n)/2; Error(kDomain) for k < 3 or n < 0.
Int Polygonal(const Int& k, const Int& n);

struct FigurePart {
  Int index;
  Int value;  // Polygonal(k, index)
};

// Parts are positive and non-increasing; their values sum to the target.
// Among all decompositions with at most the allowed number of parts the
// returned one is lexicographically smallest as a descending sequence.
struct FigurateWitness {
  Int k;  // 3 for triangular
  std::vector<FigurePart> parts;
};

// At most three triangular numbers summing to m. Each candidate largest part
// costs O(sqrt m) steps, so the search suits m up to about 10^14.
FigurateWitness EurekaDecompose(const Int& m);

inline constexpr std::int64_t kPolygonalMaxM = 10'000'000;
inline constexpr std::uint64_t kPolygonalNodeBudget = 50'000'000;
// At most k k-gonal numbers summing to m by depth-first search. Error(kBudget)
// when m exceeds kPolygonalMaxM or the search exceeds `node_budget` nodes,
// Error(kNotFound) when the search space is exhausted.
FigurateWitness PolygonalDecompose(const Int& k, const Int& m,
                                   std::uint64_t node_budget = kPolygonalNodeBudget);

}  // namespace gon
