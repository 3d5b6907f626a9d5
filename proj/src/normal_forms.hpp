#pragma once

#include "multipoly.hpp"
#include "unipoly.hpp"

namespace morincob {

// Normal form of the isolated corank-1 singularity of depth r:
//   (t_1, ..., t_{2r-1}, x)  |->  (t_1, ..., t_{2r-1}, z_1, z_2)
//   z_1 = t_1 x + ... + t_r x^r
//   z_2 = t_{r+1} x + ... + t_{2r-1} x^{r-1} + x^{r+1}
// r = 1 is the Whitney umbrella (t, tx, x^2).
PolyMap morin_normal_form(int r);

// E_k : (x_1, ..., x_k) -> (e_1, ..., e_k), elementary symmetric functions.
PolyMap elementary_symmetric_map(int k);

// The k x k matrix with first row all ones and row m+1, column j equal to
// e_m of the variables with x_j omitted. This is the Jacobian of E_k; its
// determinant is the Vandermonde product prod_{i<j} (x_i - x_j).
PolyMatrix symmetric_jacobian_matrix(int k);

MultiPoly vandermonde_product(int k);

// Full symbolic check for 2 <= k <= 6 (expansion cost caps k): the Jacobian
// of E_k equals the omit-one-variable matrix and its determinant, computed
// by cofactor expansion and by fraction-free elimination, equals the
// Vandermonde product.
bool verify_vandermonde_jacobian(int k);

}  // namespace morincob
