#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ints.hpp"

namespace morincob {

// Dense row-major integer matrix. Degenerate shapes (0 x n, n x 0) are legal
// and behave as expected under multiplication and stacking.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const Int& v : data_)
      if (v != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix scaled(const Int& c) const;
  IntMatrix transposed() const;

  // Columns of *this followed by columns of o (row counts must agree).
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix column(std::size_t j) const;
  IntMatrix rows_slice(const std::vector<std::size_t>& idx) const;
  IntMatrix cols_slice(const std::vector<std::size_t>& idx) const;

  // Exact determinant by fraction-free (Bareiss) elimination; square only.
  Int determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace morincob
