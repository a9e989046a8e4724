#include <gtest/gtest.h>

#include <functional>

#include "gon/figurate.hpp"

namespace gon {
namespace {

template <typename F>
std::string ErrorCodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.code());
  }
  return "none";
}

std::vector<Int> Values(const FigurateWitness& w) {
  std::vector<Int> out;
  for (const auto& p : w.parts) out.push_back(p.value);
  return out;
}

// Checks the witness invariants and returns true when they hold.
bool Valid(const FigurateWitness& w, const Int& m, std::size_t max_parts) {
  if (w.parts.size() > max_parts) return false;
  Int sum = 0;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const auto& p = w.parts[i];
    if (p.value <= 0 || Polygonal(w.k, p.index) != p.value) return false;
    if (i > 0 && p.value > w.parts[i - 1].value) return false;
    sum += p.value;
  }
  return sum == m;
}

// Every descending sequence of at most `left` k-gonal numbers summing to m,
// enumerated in lexicographic order; returns the first.
std::vector<Int> BruteLexSmallest(long k, long m, long left) {
  std::vector<long> values;
  for (long n = 1; Polygonal(k, n) <= m; ++n) values.push_back(Polygonal(k, n).get_si());
  std::vector<long> best;
  bool found = false;
  std::vector<long> current;
  std::function<void(long, long, long)> rec = [&](long rest, long cap, long parts) {
    if (rest == 0) {
      if (!found || current < best) best = current, found = true;
      return;
    }
    if (parts == 0) return;
    for (long v : values) {
      if (v > cap || v > rest) break;
      current.push_back(v);
      rec(rest - v, v, parts - 1);
      current.pop_back();
    }
  };
  rec(m, m, left);
  std::vector<Int> out(best.begin(), best.end());
  return out;
}

TEST(FigurateTest, Triangular) {
  EXPECT_EQ(Triangular(3), 6);
  EXPECT_EQ(Triangular(0), 0);
  EXPECT_EQ(Triangular(63), 2016);
  EXPECT_EQ(ErrorCodeOf([] { Triangular(-1); }), "domain");
}

TEST(FigurateTest, Polygonal) {
  EXPECT_EQ(Polygonal(4, 5), 25);
  EXPECT_EQ(Polygonal(3, 63), 2016);
  EXPECT_EQ(Polygonal(5, 3), 12);
  EXPECT_EQ(ErrorCodeOf([] { Polygonal(2, 3); }), "domain");
  // Dot-pattern recurrence: P(n) - P(n-1) = 1 + (k-2)(n-1).
  for (long k = 3; k <= 12; ++k) {
    for (long n = 1; n <= 200; ++n) {
      ASSERT_EQ(Polygonal(k, n) - Polygonal(k, n - 1), 1 + (k - 2) * (n - 1));
    }
  }
  for (long n = 0; n <= 500; ++n) {
    ASSERT_EQ(Polygonal(3, n), Triangular(n));
    ASSERT_EQ(Polygonal(4, n), Int(n * n));
  }
}

TEST(FigurateTest, TheonAndOddSum) {
  Int odd_sum = 0;
  for (long n = 1; n <= 10'000; ++n) {
    ASSERT_EQ(Triangular(n - 1) + Triangular(n), Int(n) * n);
    odd_sum += 2 * n - 1;
    ASSERT_EQ(odd_sum, Int(n) * n);
  }
}

TEST(EurekaTest, Examples) {
  EXPECT_TRUE(EurekaDecompose(0).parts.empty());
  const auto w = EurekaDecompose(2016);
  EXPECT_TRUE(Valid(w, 2016, 3));
  EXPECT_EQ(Values(w), BruteLexSmallest(3, 2016, 3));
  EXPECT_EQ(Values(EurekaDecompose(6)), (std::vector<Int>{3, 3}));
  EXPECT_EQ(Values(EurekaDecompose(1)), (std::vector<Int>{1}));
  EXPECT_EQ(ErrorCodeOf([] { EurekaDecompose(-1); }), "domain");
  // Both cited decompositions are admissible witnesses.
  const FigurateWitness cited{3, {{54, 1485}, {30, 465}, {11, 66}}};
  EXPECT_TRUE(Valid(cited, 2016, 3));
  EXPECT_TRUE(Valid(FigurateWitness{3, {{63, 2016}}}, 2016, 3));
}

TEST(EurekaTest, LexSmallestMatchesBruteForce) {
  for (long m = 0; m <= 400; ++m) {
    ASSERT_EQ(Values(EurekaDecompose(m)), BruteLexSmallest(3, m, 3)) << m;
  }
}

TEST(EurekaTest, Totality) {
  for (long m = 0; m <= 100'000; ++m) {
    ASSERT_TRUE(Valid(EurekaDecompose(m), m, 3)) << m;
  }
  const Int big = Pow(Int(10), 12) + 7;
  EXPECT_TRUE(Valid(EurekaDecompose(big), big, 3));
}

TEST(PolygonalTest, Examples) {
  EXPECT_EQ(Values(PolygonalDecompose(4, 7)), (std::vector<Int>{4, 1, 1, 1}));
  const auto tri = PolygonalDecompose(3, 2016);
  EXPECT_TRUE(Valid(tri, 2016, 3));
  EXPECT_TRUE(PolygonalDecompose(5, 0).parts.empty());
  EXPECT_EQ(ErrorCodeOf([] { PolygonalDecompose(2, 5); }), "domain");
  EXPECT_EQ(ErrorCodeOf([] { PolygonalDecompose(5, kPolygonalMaxM + 1); }), "budget");
  EXPECT_EQ(ErrorCodeOf([] { PolygonalDecompose(8, 999'999, 3); }), "budget");
}

TEST(PolygonalTest, LexSmallestMatchesBruteForce) {
  for (long k = 4; k <= 6; ++k) {
    for (long m = 0; m <= 120; ++m) {
      ASSERT_EQ(Values(PolygonalDecompose(k, m)), BruteLexSmallest(k, m, k))
          << "k=" << k << " m=" << m;
    }
  }
}

TEST(PolygonalTest, Totality) {
  for (long k = 3; k <= 8; ++k) {
    for (long m = 0; m <= 10'000; ++m) {
      ASSERT_TRUE(Valid(PolygonalDecompose(k, m), m, static_cast<std::size_t>(k)))
          << "k=" << k << " m=" << m;
    }
  }
}

}  // namespace
}  // namespace gon
