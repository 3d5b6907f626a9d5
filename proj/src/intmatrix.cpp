#include "intmatrix.hpp"

#include <sstream>

namespace morincob {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in sum");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_)
    throw std::invalid_argument("IntMatrix: hstack row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix r(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

IntMatrix IntMatrix::rows_slice(const std::vector<std::size_t>& idx) const {
  IntMatrix r(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
  return r;
}

IntMatrix IntMatrix::cols_slice(const std::vector<std::size_t>& idx) const {
  IntMatrix r(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
  return r;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace morincob
