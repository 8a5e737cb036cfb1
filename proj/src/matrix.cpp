#include "symclass/matrix.hpp"

#include <sstream>
#include <utility>

#include "symclass/errors.hpp"

namespace symclass {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal", row.size(), cols_);
    for (const auto& x : row) {
      data_.push_back(x);
      data_.back().canonicalize();
    }
  }
}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::minkowski_metric(std::size_t n) {
  Matrix g = identity(n + 1);
  for (std::size_t i = 1; i <= n; ++i) g(i, i) = -1;
  return g;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product", cols_, o.rows_);
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference", rows_, o.rows_);
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = -x;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t Matrix::rank() const {
  Matrix a(*this);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(a(pivot, c), a(rank, c));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < cols_; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace symclass
