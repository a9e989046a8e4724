#pragma once

// Dense rational matrices and vectors with exact elimination.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gon/exact.hpp"

namespace gon {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<std::int64_t>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
  static RatMatrix Identity(std::size_t n);
  static RatMatrix Diagonal(const RatVec& diag);
  // Matrix whose columns are the given vectors.
  static RatMatrix FromColumns(const std::vector<RatVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVec Column(std::size_t c) const;
  RatVec Row(std::size_t r) const;

  RatMatrix Transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator*(const Rat& scalar) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatVec operator*(const RatVec& v) const;
  RatVec operator*(const IntVec& v) const;
  bool operator==(const RatMatrix& other) const = default;

  Rat Determinant() const;
  std::size_t Rank() const;
  // Throws Error(kDegenerate) when singular.
  RatMatrix Inverse() const;
  bool IsSymmetric() const;
  // Sylvester's criterion on the leading principal minors.
  bool IsPositiveDefinite() const;
  // x^T M x.
  Rat QuadraticValue(const RatVec& x) const;
  Rat QuadraticValue(const IntVec& x) const;

  std::string ToString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// G = L D L^T with L unit lower triangular; requires G positive definite.
struct Ldlt {
  RatMatrix l;
  RatVec d;
};
Ldlt Decompose(const RatMatrix& gram);

Rat Dot(const RatVec& a, const RatVec& b);
RatVec ToRat(const IntVec& v);

}  // namespace gon
