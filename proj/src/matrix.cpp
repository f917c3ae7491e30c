#include "treespectra/matrix.hpp"

namespace treespectra {

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = rows.begin()->size();
  ExactMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail(Errc::bad_params, "ragged row in matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (auto& v : m.data_) v = 1;
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::all_integer() const {
  for (const Rat& v : data_)
    if (!is_integer(v)) return false;
  return true;
}

Rat ExactMatrix::trace() const {
  if (!is_square()) fail(Errc::not_square, "trace needs a square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> row_idx,
                                   std::span<const std::size_t> col_idx) const {
  ExactMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= rows_) fail(Errc::bad_params, "row index out of range");
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (col_idx[j] >= cols_) fail(Errc::bad_params, "column index out of range");
      m(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return m;
}

ExactMatrix ExactMatrix::minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
  if (rows_ < 2 || cols_ < 2) fail(Errc::bad_params, "matrix too small for a minor");
  ExactMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == drop_col) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::bad_params, "dimension mismatch in matrix product");
  ExactMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::bad_params, "dimension mismatch");
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::bad_params, "dimension mismatch");
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

ExactMatrix ExactMatrix::scaled(const Rat& s) const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

}  // namespace treespectra
