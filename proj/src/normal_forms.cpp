#include "normal_forms.hpp"

#include <stdexcept>

namespace morincob {

namespace {

VarList morin_vars(int r) {
  VarList v;
  for (int i = 1; i <= 2 * r - 1; ++i) v.push_back("t" + std::to_string(i));
  v.push_back("x");
  return v;
}

VarList sym_vars(int k) {
  VarList v;
  for (int i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

// Elementary symmetric functions of an arbitrary subset of the variables,
// by the usual one-variable-at-a-time recurrence.
std::vector<MultiPoly> elementary_symmetric(const VarList& vars,
                                            const std::vector<std::size_t>& subset,
                                            int upto) {
  std::vector<MultiPoly> e(upto + 1, MultiPoly(vars));
  e[0] = MultiPoly::constant(vars, 1);
  for (std::size_t idx : subset) {
    MultiPoly xv = MultiPoly::variable(vars, idx);
    for (int m = upto; m >= 1; --m) e[m] = e[m] + e[m - 1] * xv;
  }
  return e;
}

}  // namespace

PolyMap morin_normal_form(int r) {
  if (r < 1) throw std::invalid_argument("morin_normal_form: r must be >= 1");
  VarList vars = morin_vars(r);
  const std::size_t x = vars.size() - 1;
  PolyMap m;
  m.vars = vars;
  for (int i = 0; i < 2 * r - 1; ++i) m.coords.push_back(MultiPoly::variable(vars, i));

  MultiPoly z1(vars);
  for (int i = 1; i <= r; ++i)
    z1 = z1 + MultiPoly::variable(vars, i - 1) * MultiPoly::variable(vars, x).pow(i);
  MultiPoly z2(vars);
  for (int i = 1; i <= r - 1; ++i)
    z2 = z2 + MultiPoly::variable(vars, r + i - 1) * MultiPoly::variable(vars, x).pow(i);
  z2 = z2 + MultiPoly::variable(vars, x).pow(r + 1);

  m.coords.push_back(z1);
  m.coords.push_back(z2);
  return m;
}

PolyMap elementary_symmetric_map(int k) {
  if (k < 1) throw std::invalid_argument("elementary_symmetric_map: k must be >= 1");
  VarList vars = sym_vars(k);
  std::vector<std::size_t> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  auto e = elementary_symmetric(vars, all, k);
  PolyMap m;
  m.vars = vars;
  for (int j = 1; j <= k; ++j) m.coords.push_back(e[j]);
  return m;
}

PolyMatrix symmetric_jacobian_matrix(int k) {
  if (k < 1) throw std::invalid_argument("symmetric_jacobian_matrix: k must be >= 1");
  VarList vars = sym_vars(k);
  PolyMatrix j(vars, k, k);
  for (int col = 0; col < k; ++col) {
    std::vector<std::size_t> rest;
    for (int i = 0; i < k; ++i)
      if (i != col) rest.push_back(i);
    auto e = elementary_symmetric(vars, rest, k - 1);
    for (int row = 0; row < k; ++row) j.at(row, col) = e[row];
  }
  return j;
}

MultiPoly vandermonde_product(int k) {
  VarList vars = sym_vars(k);
  MultiPoly p = MultiPoly::constant(vars, 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      p = p * (MultiPoly::variable(vars, i) - MultiPoly::variable(vars, j));
  return p;
}

bool verify_vandermonde_jacobian(int k) {
  if (k < 2 || k > 6)
    throw std::invalid_argument("verify_vandermonde_jacobian: k must be in [2, 6]");
  PolyMatrix j = symmetric_jacobian_matrix(k);
  if (!(elementary_symmetric_map(k).jacobian() == j)) return false;
  MultiPoly want = vandermonde_product(k);
  return j.det_cofactor() == want && j.det_bareiss() == want;
}

}  // namespace morincob
