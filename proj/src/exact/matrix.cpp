#include "gon/matrix.hpp"

#include <utility>

namespace gon {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::kDimension, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::Identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::Diagonal(const RatVec& diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatMatrix RatMatrix::FromColumns(const std::vector<RatVec>& columns) {
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  RatMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw Error(ErrorKind::kDimension, "columns of unequal length");
    }
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatVec RatMatrix::Column(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatVec RatMatrix::Row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::Transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorKind::kDimension, "matrix product shape mismatch");
  }
  RatMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

RatMatrix RatMatrix::operator*(const Rat& scalar) const {
  RatMatrix out = *this;
  for (Rat& x : out.data_) x *= scalar;
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::kDimension, "matrix sum shape mismatch");
  }
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::kDimension, "matrix-vector shape mismatch");
  }
  RatVec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

RatVec RatMatrix::operator*(const IntVec& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::kDimension, "matrix-vector shape mismatch");
  }
  RatVec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) out[r] += (*this)(r, c) * Rat(static_cast<long>(v[c]));
    }
  }
  return out;
}

namespace {

// Row-echelon form in place; returns (rank, determinant sign/scale factor).
std::pair<std::size_t, Rat> Eliminate(RatMatrix& m) {
  std::size_t rank = 0;
  Rat factor = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      factor = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
      factor = -factor;
    }
    const Rat p = m(rank, c);
    factor *= p;
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rat f = m(r, c) / p;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return {rank, factor};
}

}  // namespace

Rat RatMatrix::Determinant() const {
  if (!square()) throw Error(ErrorKind::kDimension, "determinant of non-square");
  if (rows_ == 0) return 1;
  RatMatrix m = *this;
  auto [rank, factor] = Eliminate(m);
  return rank == rows_ ? factor : Rat(0);
}

std::size_t RatMatrix::Rank() const {
  RatMatrix m = *this;
  return Eliminate(m).first;
}

RatMatrix RatMatrix::Inverse() const {
  if (!square()) throw Error(ErrorKind::kDimension, "inverse of non-square");
  const std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = Identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::kDegenerate, "singular matrix");
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const Rat p = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

bool RatMatrix::IsSymmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool RatMatrix::IsPositiveDefinite() const {
  if (!IsSymmetric()) return false;
  for (std::size_t k = 1; k <= rows_; ++k) {
    RatMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = (*this)(r, c);
    }
    if (minor.Determinant() <= 0) return false;
  }
  return true;
}

Rat RatMatrix::QuadraticValue(const RatVec& x) const {
  if (!square() || x.size() != rows_) {
    throw Error(ErrorKind::kDimension, "quadratic form shape mismatch");
  }
  Rat total = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    Rat row = 0;
    for (std::size_t c = 0; c < cols_; ++c) row += (*this)(r, c) * x[c];
    total += x[r] * row;
  }
  return total;
}

Rat RatMatrix::QuadraticValue(const IntVec& x) const {
  return QuadraticValue(ToRat(x));
}

std::string RatMatrix::ToString() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += gon::ToString((*this)(r, c));
    }
    out += "]";
  }
  return out + "]";
}

Ldlt Decompose(const RatMatrix& gram) {
  if (!gram.IsSymmetric()) {
    throw Error(ErrorKind::kDomain, "LDLT of a non-symmetric matrix");
  }
  const std::size_t n = gram.rows();
  Ldlt out{RatMatrix::Identity(n), RatVec(n, Rat(0))};
  for (std::size_t j = 0; j < n; ++j) {
    Rat d = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= out.l(j, k) * out.l(j, k) * out.d[k];
    if (d <= 0) {
      throw Error(ErrorKind::kDomain, "matrix is not positive definite");
    }
    out.d[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat v = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= out.l(i, k) * out.l(j, k) * out.d[k];
      out.l(i, j) = v / d;
    }
  }
  return out;
}

Rat Dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimension, "dot shape mismatch");
  Rat total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

RatVec ToRat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace gon
