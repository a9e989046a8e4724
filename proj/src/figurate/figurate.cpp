#include "gon/figurate.hpp"

#include <algorithm>

namespace gon {

Int Triangular(const Int& n) {
  if (n < 0) throw Error(ErrorKind::kDomain, "n must be nonnegative");
  return n * (n + 1) / 2;
}

Int Polygonal(const Int& k, const Int& n) {
  if (k < 3) throw Error(ErrorKind::kDomain, "k must be at least 3");
  if (n < 0) throw Error(ErrorKind::kDomain, "n must be nonnegative");
  return ((k - 2) * n * n - (k - 4) * n) / 2;
}

namespace {

// Index i with T(i) = t, or -1 when t is not triangular (t >= 0).
Int TriangularIndex(const Int& t) {
  const Int disc = 8 * t + 1;
  const Int root = ISqrt(disc);
  return root * root == disc ? Int((root - 1) / 2) : Int(-1);
}

// Smallest i with T(i) >= t.
Int TriangularCeilIndex(const Int& t) {
  if (t <= 0) return 0;
  Int i = (ISqrt(8 * t + 1) - 1) / 2;
  while (Triangular(i) < t) ++i;
  return i;
}

}  // namespace

FigurateWitness EurekaDecompose(const Int& m) {
  if (m < 0) throw Error(ErrorKind::kDomain, "m must be nonnegative");
  FigurateWitness out{3, {}};
  if (m == 0) return out;
  // The largest part is at least m/3; the first feasible one is the
  // lexicographically smallest, and likewise for the second.
  for (Int i1 = TriangularCeilIndex(Int((m + 2) / 3));; ++i1) {
    const Int t1 = Triangular(i1);
    if (t1 > m) break;
    const Int rest = m - t1;
    if (rest == 0) {
      out.parts = {{i1, t1}};
      return out;
    }
    for (Int i2 = TriangularCeilIndex(Int((rest + 1) / 2)); i2 <= i1; ++i2) {
      const Int t2 = Triangular(i2);
      if (t2 > rest) break;
      const Int t3 = rest - t2;
      const Int i3 = TriangularIndex(t3);
      if (i3 < 0) continue;
      out.parts = {{i1, t1}, {i2, t2}};
      if (t3 > 0) out.parts.push_back({i3, t3});
      return out;
    }
  }
  throw Error(ErrorKind::kNotFound, "no three-triangular decomposition of " + ToString(m));
}

namespace {

class PolygonalSearch {
 public:
  PolygonalSearch(std::int64_t k, std::int64_t m, std::uint64_t budget)
      : budget_(budget) {
    for (std::int64_t n = 1;; ++n) {
      const std::int64_t v = ((k - 2) * n * n - (k - 4) * n) / 2;
      if (v > m) break;
      values_.push_back(v);
    }
  }

  // Descending parts, each at most values_[cap], at most `left` of them.
  bool Search(std::int64_t rest, std::size_t cap, std::int64_t left) {
    if (rest == 0) return true;
    if (left == 0) return false;
    if (++nodes_ > budget_) throw Error(ErrorKind::kBudget, "polygonal search budget exceeded");
    // left parts of at most values_[cap] must reach rest.
    if (values_[cap] * left < rest) return false;
    // Smallest admissible part first: at least rest / left.
    const std::int64_t need = (rest + left - 1) / left;
    auto it = std::lower_bound(values_.begin(), values_.begin() + cap + 1, need);
    for (auto i = static_cast<std::size_t>(it - values_.begin()); i <= cap; ++i) {
      if (values_[i] > rest) break;
      chosen_.push_back(i);
      if (Search(rest - values_[i], i, left - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t Top() const { return values_.size() - 1; }
  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::int64_t ValueAt(std::size_t i) const { return values_[i]; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> values_;  // values_[i] = P_k(i + 1)
  std::vector<std::size_t> chosen_;
};

}  // namespace

FigurateWitness PolygonalDecompose(const Int& k, const Int& m, std::uint64_t node_budget) {
  if (k < 3) throw Error(ErrorKind::kDomain, "k must be at least 3");
  if (m < 0) throw Error(ErrorKind::kDomain, "m must be nonnegative");
  if (k == 3) return EurekaDecompose(m);
  if (m > kPolygonalMaxM) throw Error(ErrorKind::kBudget, "m exceeds the search cap");
  FigurateWitness out{k, {}};
  if (m == 0) return out;
  // At most m positive parts fit.
  const std::int64_t parts = k > m ? ToInt64(m) : ToInt64(k);
  PolygonalSearch search(ToInt64(k), ToInt64(m), node_budget);
  if (!search.Search(ToInt64(m), search.Top(), parts)) {
    throw Error(ErrorKind::kNotFound,
                "no decomposition of " + ToString(m) + " into " + ToString(k) + "-gonal numbers");
  }
  for (std::size_t i : search.chosen()) {
    out.parts.push_back({Int(static_cast<long>(i + 1)), search.ValueAt(i)});
  }
  return out;
}

}  // namespace gon
