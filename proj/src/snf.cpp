#include "snf.hpp"

namespace morincob {

namespace {

struct Work {
  IntMatrix w, u, u_inv, v, v_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    w.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    w.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  // row dst += c * row src
  void row_op(std::size_t dst, std::size_t src, const Int& c) {
    w.add_row_multiple(dst, src, c);
    u.add_row_multiple(dst, src, c);
    u_inv.add_col_multiple(src, dst, -c);
  }
  // col dst += c * col src
  void col_op(std::size_t dst, std::size_t src, const Int& c) {
    w.add_col_multiple(dst, src, c);
    v.add_col_multiple(dst, src, c);
    v_inv.add_row_multiple(src, dst, -c);
  }
  void negate_row(std::size_t r) {
    w.negate_row(r);
    u.negate_row(r);
    u_inv.negate_col(r);
  }
};

// Pivot choice: smallest nonzero absolute value in the region, ties broken
// by lowest row then lowest column, so u and v are reproducible.
bool find_pivot(const IntMatrix& w, std::size_t t, std::size_t row_end,
                std::size_t col_end, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < row_end; ++i)
    for (std::size_t j = t; j < col_end; ++j) {
      const Int& x = w.at(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Diagonalize the region [t, row_end) x [t, col_end); leaves everything
// outside the region untouched.
void reduce_region(Work& wk, std::size_t t0, std::size_t row_end,
                   std::size_t col_end) {
  for (std::size_t t = t0; t < std::min(row_end, col_end); ++t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!find_pivot(wk.w, t, row_end, col_end, pi, pj)) return;
      wk.swap_rows(t, pi);
      wk.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < row_end; ++i) {
        if (wk.w.at(i, t) == 0) continue;
        Int q = wk.w.at(i, t) / wk.w.at(t, t);
        wk.row_op(i, t, -q);
        if (wk.w.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < col_end; ++j) {
        if (wk.w.at(t, j) == 0) continue;
        Int q = wk.w.at(t, j) / wk.w.at(t, t);
        wk.col_op(j, t, -q);
        if (wk.w.at(t, j) != 0) clean = false;
      }
      if (clean) break;
      // Nonzero remainders are all smaller than the old pivot, so the
      // re-pivoted pass strictly shrinks and the loop terminates.
    }
  }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  Work wk{a, IntMatrix::identity(r), IntMatrix::identity(r),
          IntMatrix::identity(c), IntMatrix::identity(c)};

  reduce_region(wk, 0, r, c);

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t)
    if (wk.w.at(t, t) < 0) wk.negate_row(t);

  // Repair the divisibility chain pairwise; each repair replaces
  // (a, b) by (gcd, lcm), so values only shrink and this settles.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      const Int a0 = wk.w.at(t, t), b0 = wk.w.at(t + 1, t + 1);
      if (a0 == 0 || b0 == 0 || b0 % a0 == 0) continue;
      wk.col_op(t, t + 1, 1);
      reduce_region(wk, t, t + 2, t + 2);
      if (wk.w.at(t, t) < 0) wk.negate_row(t);
      if (wk.w.at(t + 1, t + 1) < 0) wk.negate_row(t + 1);
      changed = true;
    }
  }

  return SmithResult{wk.u, wk.w, wk.v, wk.u_inv, wk.v_inv};
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (s.diag(j) == 0) free_cols.push_back(j);
  // a * (v e_j) = u^{-1} d e_j = 0 exactly when the diagonal entry is 0.
  return s.v.cols_slice(free_cols);
}

IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& lat) {
  if (a.rows() != lat.rows())
    throw std::invalid_argument("preimage_lattice: row mismatch");
  IntMatrix combined = a.hstack(lat);
  IntMatrix ker = integer_kernel(combined);
  std::vector<std::size_t> head(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) head[i] = i;
  return ker.rows_slice(head);
}

bool lattice_contains(const IntMatrix& lat, const IntMatrix& b_col) {
  if (b_col.cols() != 1 || lat.rows() != b_col.rows())
    throw std::invalid_argument("lattice_contains: shape mismatch");
  // Solve lat * x = b via SNF: d * y = u * b with x = v * y.
  SmithResult s = smith_normal_form(lat);
  IntMatrix ub = s.u * b_col;
  for (std::size_t i = 0; i < lat.rows(); ++i) {
    Int di = s.diag(i);
    const Int& bi = ub.at(i, 0);
    if (di == 0) {
      if (bi != 0) return false;
    } else if (bi % di != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace morincob
