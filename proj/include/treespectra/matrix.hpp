#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "treespectra/error.hpp"
#include "treespectra/numbers.hpp"

namespace treespectra {

/// Dense matrix with arbitrary-precision rational entries, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) fail(Errc::bad_params, "matrix dimensions must be positive");
  }
  /// Row-major literal, mostly for tests: ExactMatrix::from_rows({{0,2},{2,0}}).
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  bool all_integer() const;
  bool operator==(const ExactMatrix& o) const = default;

  Rat trace() const;
  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;
  /// Principal submatrix with one row and the same column removed.
  ExactMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Rat& s) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace treespectra
