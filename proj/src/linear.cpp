#include "voa/linear.hpp"

namespace voa {

namespace {

void check_size(std::size_t cols) {
  if (cols > Matrix::kMaxDenseColumns) {
    throw Error(ErrorKind::DenseTooLarge, "dense matrix with " + std::to_string(cols) + " columns");
  }
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_size(cols);
  data_.assign(rows * cols, Scalar(0));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return row_reduce(m).size();
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidSpec, "determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && m(sel, col) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = 1 / m(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col) == 0) continue;
      const Scalar f = m(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidSpec, "inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw Error(ErrorKind::InvalidSpec, "singular matrix");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
  return out;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(cols_, Scalar(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    out.push_back(std::move(x));
  }
  return out;
}

LinearCombination<std::size_t> Matrix::flatten(std::size_t offset) const {
  LinearCombination<std::size_t> out;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != 0) out.add(offset + i, data_[i]);
  return out;
}

}  // namespace voa
