#pragma once

#include "intmatrix.hpp"

namespace morincob {

// u * a * v = d with u, v unimodular and d diagonal, nonnegative,
// d1 | d2 | ... . The inverses come along for free from the elementary
// operations; callers use them to express new basis vectors in old
// coordinates.
struct SmithResult {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;

  Int diag(std::size_t i) const {
    return (i < d.rows() && i < d.cols()) ? d.at(i, i) : Int(0);
  }
  std::size_t rank() const {
    std::size_t n = std::min(d.rows(), d.cols()), r = 0;
    while (r < n && d.at(r, r) != 0) ++r;
    return r;
  }
};

SmithResult smith_normal_form(const IntMatrix& a);

// Column basis of { x : a * x = 0 } over the integers.
IntMatrix integer_kernel(const IntMatrix& a);

// Column basis of { x : a * x lies in the column span of lat }.
IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& lat);

// Is b in the column span of lat (over the integers)?
bool lattice_contains(const IntMatrix& lat, const IntMatrix& b_col);

}  // namespace morincob
